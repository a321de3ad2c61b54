#ifndef CODIFF_GROUP_ACTIONS_HPP
#define CODIFF_GROUP_ACTIONS_HPP

#include <optional>
#include <vector>

#include "codiff/coderivation.hpp"
#include "codiff/qmatrix.hpp"

namespace codiff {

// Parity-preserving linear automorphism of the graded space: block
// diagonal with an even p x p block and an odd q x q block.
class LinearAutomorphism {
public:
    LinearAutomorphism(const GradedSpace& s, QMatrix matrix);

    static LinearAutomorphism identity(const GradedSpace& s);
    static LinearAutomorphism diagonal(const GradedSpace& s, const QVector& entries);
    // Swaps two basis vectors of equal parity.
    static LinearAutomorphism transposition(const GradedSpace& s, int i, int j);

    const GradedSpace& space() const { return space_; }
    const QMatrix& matrix() const { return matrix_; }
    const QMatrix& inverse_matrix() const { return inverse_; }

    LinearAutomorphism compose_with(const LinearAutomorphism& inner) const;

private:
    GradedSpace space_;
    QMatrix matrix_;
    QMatrix inverse_;
};

// Pullback (g* d)(w_1,...,w_n) = g^{-1} d(g w_1, ..., g w_n), termwise over
// the arities present in d. For diagonal g the coefficient of phi^{jk}_i
// scales by g_j g_k / g_i.
Coderivation<Rational> pullback(const LinearAutomorphism& g, const Coderivation<Rational>& d);

// A nilpotent arity-1 shift beta (an element of C^{0,1} in extension
// language). exp(beta) acts on coderivations by the finite series
//   d -> d + [d,beta] + 1/2 [[d,beta],beta] + ...
class BetaShift {
public:
    explicit BetaShift(Coderivation<Rational> beta);

    const Coderivation<Rational>& coderivation() const { return beta_; }

    // The induced action on a coderivation.
    Coderivation<Rational> act(const Coderivation<Rational>& d) const;

    // exp(beta) as a linear map on the space (I + B + B^2/2 + ...).
    LinearAutomorphism as_linear_map() const;

private:
    Coderivation<Rational> beta_;
    QMatrix matrix_;  // beta as a linear map
};

// Opposite algebra: reverse both inputs with the Koszul sign; the
// coefficient of phi^{jk}_i maps to (-1)^{|v_j||v_k|} times the
// coefficient of phi^{kj}_i.
Coderivation<Rational> opposite(const Coderivation<Rational>& d);

struct EquivalenceCheck {
    bool ok = false;
    Coderivation<Rational> difference;  // pullback(g,d) - d2
};

EquivalenceCheck verify_equivalence(const Coderivation<Rational>& d,
                                    const Coderivation<Rational>& d2,
                                    const LinearAutomorphism& g);

// Witness search over the family permutation x diagonal x unipotent
// (exp(beta)-style) maps with entries drawn from a fixed rational
// candidate ladder; deterministic first match. Returns nullopt when the
// family is exhausted (which does not prove non-equivalence).
std::optional<LinearAutomorphism> find_witness(const Coderivation<Rational>& d,
                                               const Coderivation<Rational>& d2,
                                               int effort = 1);

}  // namespace codiff

#endif
