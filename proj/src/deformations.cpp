#include "codiff/deformations.hpp"

#include <algorithm>
#include <stdexcept>

namespace codiff {

namespace {

Polynomial to_polynomial(const Monomial& m) {
    Polynomial p(1);
    for (const auto& [name, exp] : m) {
        const Polynomial v = Polynomial::variable(name);
        for (int i = 0; i < exp; ++i) p *= v;
    }
    return p;
}

Coderivation<Polynomial> lift(const Coderivation<Rational>& d) {
    return d.map_coefficients([](const Rational& c) { return Polynomial(c); });
}

// The coefficient coderivations of the degree-n parameter monomials.
std::map<Monomial, Coderivation<Rational>, GradedLexLess> monomial_slices(
    const Coderivation<Polynomial>& f, int n) {
    std::map<Monomial, Coderivation<Rational>, GradedLexLess> out;
    for (const auto& [key, poly] : f.terms()) {
        for (const auto& [mono, c] : poly.terms()) {
            if (monomial_degree(mono) != n) continue;
            auto [it, inserted] = out.emplace(mono, Coderivation<Rational>(f.space()));
            it->second.add_term(key.word, key.target, c);
        }
    }
    return out;
}

// Corrects the state at parameter degree n; returns true when a
// correction term or a residue contribution was added.
bool extend_one(DeformationState& s, const CoboundarySolver& solver, int n) {
    const Coderivation<Polynomial> defect =
        bracket(s.current, s.current) * Polynomial(Rational(1, 2));

    bool changed = false;
    for (const auto& [mono, target] : monomial_slices(defect, n)) {
        const QVector coords = solver.to_coords(target);
        const ImageDecomposition::Split split = solver.decomposition().decompose(coords);

        const Coderivation<Rational> correction = solver.domain_element(split.preimage);
        if (!correction.is_zero()) {
            s.current += lift(correction) * (to_polynomial(mono) * Rational(-1));
            changed = true;
        }
        for (int r : solver.decomposition().complement_rows()) {
            const Rational& c = split.residue[static_cast<std::size_t>(r)];
            if (c.is_zero()) continue;
            s.residue_by_direction[r] += to_polynomial(mono) * c;
            changed = true;
        }
    }
    s.order = n;
    return changed;
}

void rebuild_relations(DeformationState& s) {
    s.relations.clear();
    for (const auto& [row, poly] : s.residue_by_direction) {
        if (poly.is_zero()) continue;
        Polynomial g = poly.normalized();
        if (std::find(s.relations.begin(), s.relations.end(), g) == s.relations.end()) {
            s.relations.push_back(std::move(g));
        }
    }
}

std::map<std::string, Rational> full_assignment(
    const DeformationState& s, const std::map<std::string, Rational>& assignment) {
    std::map<std::string, Rational> full = assignment;
    for (const std::string& t : s.parameters) full.emplace(t, Rational(0));
    for (const auto& [name, value] : assignment) {
        if (std::find(s.parameters.begin(), s.parameters.end(), name) == s.parameters.end()) {
            throw std::invalid_argument("unknown deformation parameter: " + name);
        }
    }
    return full;
}

}  // namespace

namespace {

DeformationState build_state(const Coderivation<Rational>& d,
                             std::vector<Coderivation<Rational>> basis) {
    DeformationState s;
    s.base = d;
    s.current = lift(d);
    for (Coderivation<Rational>& rep : basis) {
        const std::string name = "t" + std::to_string(s.parameters.size() + 1);
        s.parameters.push_back(name);
        s.current += lift(rep) * Polynomial::variable(name);
        s.infinitesimal.push_back(std::move(rep));
    }
    s.order = 1;
    return s;
}

}  // namespace

DeformationState infinitesimal_deformation(const Coderivation<Rational>& d) {
    if (!is_codifferential(d).ok) {
        throw std::invalid_argument("infinitesimal_deformation: base is not a codifferential");
    }
    std::vector<Coderivation<Rational>> basis;
    for (const Coderivation<Rational>& rep : cohomology_basis(d, 2)) {
        if (rep.is_odd()) basis.push_back(rep);
    }
    return build_state(d, std::move(basis));
}

DeformationState infinitesimal_deformation_with_basis(
    const Coderivation<Rational>& d, std::vector<Coderivation<Rational>> basis) {
    if (!is_codifferential(d).ok) {
        throw std::invalid_argument("infinitesimal_deformation: base is not a codifferential");
    }
    std::size_t odd_classes = 0;
    for (const Coderivation<Rational>& rep : cohomology_basis(d, 2)) {
        if (rep.is_odd()) ++odd_classes;
    }
    if (basis.size() != odd_classes) {
        throw std::invalid_argument("infinitesimal basis size must equal odd h^2");
    }
    for (const Coderivation<Rational>& rep : basis) {
        if (!rep.is_odd() || rep.homogeneous_arity() != 2 || !bracket(d, rep).is_zero()) {
            throw std::invalid_argument("infinitesimal basis must consist of odd 2-cocycles");
        }
    }
    return build_state(d, std::move(basis));
}

Coderivation<Polynomial> mc_defect(const DeformationState& s) {
    // [base,base] = 0, so D(phi) + 1/2[phi,phi] = 1/2[current,current].
    const Coderivation<Polynomial> defect =
        bracket(s.current, s.current) * Polynomial(Rational(1, 2));
    const int order = s.order;
    return defect.map_coefficients(
        [order](const Polynomial& p) { return p.truncated(order); });
}

DeformationState extend_to_order(DeformationState s, int k) {
    if (k < s.order) {
        throw std::invalid_argument("extend_to_order: cannot shrink the order");
    }
    if (s.parameters.empty()) {
        s.order = k;
        return s;
    }
    const CoboundarySolver solver(s.base, 2, /*target_parity=*/0);
    for (int n = s.order + 1; n <= k; ++n) extend_one(s, solver, n);
    rebuild_relations(s);
    return s;
}

DeformationState stabilize(DeformationState s, int cap) {
    if (s.parameters.empty()) return s;
    const CoboundarySolver solver(s.base, 2, /*target_parity=*/0);
    int quiet = 0;
    for (int n = s.order + 1; n <= cap && quiet < 2; ++n) {
        quiet = extend_one(s, solver, n) ? 0 : quiet + 1;
    }
    rebuild_relations(s);
    return s;
}

RelationIdeal obstruction_relations(const DeformationState& s) {
    RelationIdeal ideal;
    ideal.generators = s.relations;

    const std::size_t m = s.parameters.size();
    std::vector<std::vector<std::size_t>> killing;  // index subsets, by mask order
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::map<std::string, Polynomial> subs;
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::size_t{1} << i)) {
                subs[s.parameters[i]] = Polynomial(0);
                subset.push_back(i);
            }
        }
        const bool kills = std::all_of(
            ideal.generators.begin(), ideal.generators.end(),
            [&subs](const Polynomial& g) { return g.substitute(subs).is_zero(); });
        if (kills) killing.push_back(std::move(subset));
    }
    // keep the inclusion-minimal subsets
    for (const auto& a : killing) {
        const bool minimal = std::none_of(killing.begin(), killing.end(), [&a](const auto& b) {
            return b.size() < a.size() &&
                   std::includes(a.begin(), a.end(), b.begin(), b.end());
        });
        if (!minimal) continue;
        SolutionComponent comp;
        for (std::size_t i : a) comp.vanishing.push_back(s.parameters[i]);
        ideal.components.push_back(std::move(comp));
    }
    return ideal;
}

Coderivation<Rational> specialize(const DeformationState& s,
                                  const std::map<std::string, Rational>& assignment) {
    const std::map<std::string, Rational> full = full_assignment(s, assignment);
    return s.current.map_coefficients(
        [&full](const Polynomial& p) { return p.evaluate(full); });
}

JumpCheck verify_jump(const DeformationState& s,
                      const std::map<std::string, Rational>& assignment,
                      const Coderivation<Rational>& target, int effort) {
    const std::map<std::string, Rational> full = full_assignment(s, assignment);
    for (const Polynomial& g : s.relations) {
        if (!g.evaluate(full).is_zero()) {
            throw std::invalid_argument(
                "verify_jump: assignment does not annihilate relation " + g.to_string());
        }
    }
    const Coderivation<Rational> specialized = specialize(s, assignment);

    JumpCheck check;
    if (specialized == target) {
        check.status = JumpCheck::Status::Confirmed;
        check.witness = LinearAutomorphism::identity(s.base.space());
        return check;
    }
    if (auto g = find_witness(specialized, target, effort)) {
        check.status = JumpCheck::Status::Confirmed;
        check.witness = std::move(g);
    }
    return check;
}

}  // namespace codiff
