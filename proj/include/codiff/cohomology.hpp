#ifndef CODIFF_COHOMOLOGY_HPP
#define CODIFF_COHOMOLOGY_HPP

#include <vector>

#include "codiff/coderivation.hpp"
#include "codiff/qmatrix.hpp"

namespace codiff {

// Basis terms of the chosen parity sector of C^n = Hom(W^n, W), in the
// canonical term order (word lex, then target).
std::vector<TermKey> cochain_basis(const GradedSpace& s, int n, int parity);

// Matrix of D = [d,-] from the parity sector of C^n into the opposite
// sector of C^{n+1} (d is odd, so D flips parity).
struct CoboundaryMatrix {
    int degree = 0;
    int domain_parity = 0;
    std::vector<TermKey> domain;    // columns
    std::vector<TermKey> codomain;  // rows
    QMatrix matrix;
};

// Set allow_non_codifferential to skip the [d,d]=0 check.
CoboundaryMatrix coboundary_matrix(const Coderivation<Rational>& d, int n, int parity,
                                   bool allow_non_codifferential = false);

struct CohomologyReport {
    struct Degree {
        SectorDims z;  // cocycles
        SectorDims b;  // coboundaries
        SectorDims h;  // z - b
    };
    std::vector<Degree> per_degree;  // index = degree n
};

CohomologyReport cohomology_dims(const Coderivation<Rational>& d, int n_max);

// Cocycle representatives whose classes form a basis of H^n, even classes
// first, each reduced against im(D) and earlier representatives and
// pivot-normalized, so the output is canonical.
std::vector<Coderivation<Rational>> cohomology_basis(const Coderivation<Rational>& d, int n);

struct CoboundarySolution {
    Coderivation<Rational> preimage;  // f with D(f) + residue = target
    Coderivation<Rational> residue;   // component in the canonical complement of im D
};

// Caches the image decomposition of one coboundary matrix so repeated
// right-hand sides (the deformation recursion) stay cheap.
class CoboundarySolver {
public:
    // Solves D(x) + residue = target for targets of arity n+1 in the given
    // parity sector of C^{n+1}.
    CoboundarySolver(const Coderivation<Rational>& d, int n, int target_parity);

    CoboundarySolution solve(const Coderivation<Rational>& target) const;
    CoboundarySolution solve(const QVector& target_coords) const;

    const std::vector<TermKey>& domain() const { return cob_.domain; }
    const std::vector<TermKey>& codomain() const { return cob_.codomain; }
    const ImageDecomposition& decomposition() const { return decomp_; }

    QVector to_coords(const Coderivation<Rational>& target) const;
    Coderivation<Rational> domain_element(const QVector& coords) const;
    Coderivation<Rational> codomain_element(const QVector& coords) const;

private:
    GradedSpace space_;
    CoboundaryMatrix cob_;
    ImageDecomposition decomp_;
};

// One-shot convenience: arity and parity are read off the target.
CoboundarySolution solve_coboundary(const Coderivation<Rational>& d,
                                    const Coderivation<Rational>& target);

}  // namespace codiff

#endif
