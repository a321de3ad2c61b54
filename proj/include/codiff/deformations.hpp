#ifndef CODIFF_DEFORMATIONS_HPP
#define CODIFF_DEFORMATIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codiff/coderivation.hpp"
#include "codiff/cohomology.hpp"
#include "codiff/group_actions.hpp"

namespace codiff {

// A formal deformation d + sum_i t_i delta_i + (higher corrections), with
// polynomial coefficients truncated at `order` in the parameters.
struct DeformationState {
    Coderivation<Rational> base;
    std::vector<std::string> parameters;                // t1..tm
    std::vector<Coderivation<Rational>> infinitesimal;  // canonical odd H^2 basis
    Coderivation<Polynomial> current;
    int order = 1;
    std::vector<Polynomial> relations;  // normalized obstruction generators

    // Obstruction residue per canonical complement direction of im(D) in
    // the even sector of C^3; `relations` is derived from this.
    std::map<int, Polynomial> residue_by_direction;
};

// d + sum t_i delta_i where the delta_i are the canonical odd cocycle
// representatives of H^2(d). One parameter per odd class.
DeformationState infinitesimal_deformation(const Coderivation<Rational>& d);

// Same, but with caller-chosen odd cocycle representatives (their classes
// must span odd H^2); used to match a reference parameterization.
DeformationState infinitesimal_deformation_with_basis(
    const Coderivation<Rational>& d, std::vector<Coderivation<Rational>> basis);

// D(phi) + 1/2 [phi,phi] for current = base + phi, truncated at the
// state's order. Zero iff current is a codifferential to that order.
Coderivation<Polynomial> mc_defect(const DeformationState& s);

// Order-by-order correction: at each parameter degree n <= k, solve
// D(psi_n) = -(degree-n defect) per parameter monomial; unsolvable
// components accumulate as relation generators.
DeformationState extend_to_order(DeformationState s, int k);

// Extends until two consecutive orders add no corrections and no new
// relations, capped at `cap`.
DeformationState stabilize(DeformationState s, int cap = 4);

// A linear solution component of the relation ideal: the coordinate
// subspace where the listed parameters vanish.
struct SolutionComponent {
    std::vector<std::string> vanishing;
};

struct RelationIdeal {
    std::vector<Polynomial> generators;
    std::vector<SolutionComponent> components;  // minimal coordinate components
};

// Relation generators in canonical form plus the minimal coordinate
// subspaces that annihilate every generator.
RelationIdeal obstruction_relations(const DeformationState& s);

// Exact specialization of the parameters; unassigned parameters are 0.
Coderivation<Rational> specialize(const DeformationState& s,
                                  const std::map<std::string, Rational>& assignment);

struct JumpCheck {
    enum class Status { Confirmed, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<LinearAutomorphism> witness;

    bool confirmed() const { return status == Status::Confirmed; }
};

// Specializes the deformation at the assignment (which must annihilate
// every relation) and searches for an equivalence witness onto target.
// An exhausted search is Inconclusive, not a refutation.
JumpCheck verify_jump(const DeformationState& s,
                      const std::map<std::string, Rational>& assignment,
                      const Coderivation<Rational>& target, int effort = 2);

}  // namespace codiff

#endif
