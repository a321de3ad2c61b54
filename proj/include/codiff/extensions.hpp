#ifndef CODIFF_EXTENSIONS_HPP
#define CODIFF_EXTENSIONS_HPP

#include <vector>

#include "codiff/coderivation.hpp"
#include "codiff/group_actions.hpp"
#include "codiff/qmatrix.hpp"

namespace codiff {

// Extension datum d = delta + mu + lambda + psi for a split V = M + W,
// with M an ideal and W the quotient:
//   delta : algebra structure on W (inputs and target in W)
//   mu    : algebra structure on M (inputs and target in M)
//   lambda: mixed sector C^{1,1} (one W input, one M input, target in M)
//   psi   : sector C^{0,2} (two W inputs, target in M)
struct ExtensionDatum {
    GradedSpace space;
    std::vector<int> m_indices;
    std::vector<int> w_indices;
    Coderivation<Rational> delta;
    Coderivation<Rational> mu;
    Coderivation<Rational> lambda;
    Coderivation<Rational> psi;

    // Throws naming the offending term when a component leaves its sector.
    void validate() const;

    Coderivation<Rational> assembled() const;  // delta + mu + lambda + psi
};

struct ExtensionReport {
    bool maurer_cartan = false;   // [delta,lambda] + 1/2[lambda,lambda] + [mu,psi] = 0
    bool compatibility = false;   // [mu,lambda] = 0
    bool cocycle = false;         // [delta+lambda,psi] = 0
    Coderivation<Rational> mc_defect;
    Coderivation<Rational> compatibility_defect;
    Coderivation<Rational> cocycle_defect;

    bool all() const { return maurer_cartan && compatibility && cocycle; }
};

ExtensionReport check_extension(const ExtensionDatum& e);

// The restricted equivalence action of exp(beta), beta in C^{0,1}
// (one W input, target in M):
//   lambda' = lambda + [mu,beta]
//   psi'    = psi + [delta + lambda + 1/2[mu,beta], beta]
ExtensionDatum restricted_equivalence(const ExtensionDatum& e,
                                      const Coderivation<Rational>& beta);

// Left/right multiplication matrices of lambda for a single odd W vector
// acting on an even M.
struct LRMatrices {
    QMatrix left;
    QMatrix right;
    Coderivation<Rational> codifferential;  // delta + assembled lambda
};

// lambda = sum_{i,j} psi^{w m(j)}_{m(i)} L^i_j + psi^{m(j) w}_{m(i)} R^i_j
// for the split M = <v_1,...>, W = <w_index>.
Coderivation<Rational> assemble_lambda(const GradedSpace& space,
                                       const std::vector<int>& m_indices, int w_index,
                                       const QMatrix& left, const QMatrix& right);

// The diagonal solutions of L^2 = L, LR = RL, R^2 = -R for extensions of
// the simple 0|1-dimensional algebra delta = psi(3,3;3) by the trivial
// structure on M = <v_1,v_2>; exactly 10 up to the reordering action.
std::vector<LRMatrices> enumerate_simple01_solutions();

}  // namespace codiff

#endif
