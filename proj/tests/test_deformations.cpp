// The versal-deformation engine: infinitesimal states, Maurer-Cartan
// defects, obstruction relations and jump verification.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "codiff/catalog.hpp"
#include "codiff/deformations.hpp"

using namespace codiff;

namespace {
const GradedSpace kSpace{2, 1};

Coderivation<Rational> term(const Word& w, int target, long c = 1) {
    Coderivation<Rational> d(kSpace);
    d.add_term(w, target, Rational(c));
    return d;
}

int odd_h2(const Coderivation<Rational>& d) {
    int count = 0;
    for (const auto& rep : cohomology_basis(d, 2)) count += rep.is_odd();
    return count;
}
}  // namespace

TEST_CASE("parameter count equals odd h^2 for every catalog entry") {
    for (const auto& e : tabulated_entries()) {
        const auto s = infinitesimal_deformation(e.formula);
        CHECK(static_cast<int>(s.parameters.size()) == odd_h2(e.formula));
    }
}

TEST_CASE("d_1 is rigid: no odd classes, no parameters") {
    const auto s = infinitesimal_deformation(get("d_1").formula);
    CHECK(s.parameters.empty());
    CHECK(extend_to_order(s, 4).relations.empty());
}

TEST_CASE("d_11 carries one parameter and is flat as displayed") {
    const auto d = get("d_11").formula;
    const auto s =
        extend_to_order(infinitesimal_deformation_with_basis(d, {term({2, 2}, 3)}), 4);
    CHECK(s.parameters == std::vector<std::string>{"t1"});
    CHECK(mc_defect(s).is_zero());
    CHECK(s.relations.empty());
    // the displayed d-infinity is d + psi(2,2;3) t with no corrections
    auto expected = d.map_coefficients([](const Rational& c) { return Polynomial(c); });
    expected += term({2, 2}, 3).map_coefficients(
        [](const Rational& c) { return Polynomial(c) * Polynomial::variable("t1"); });
    CHECK(s.current == expected);
}

TEST_CASE("d_14 carries three parameters and no relations") {
    const auto s = extend_to_order(infinitesimal_deformation(get("d_14").formula), 3);
    CHECK(s.parameters.size() == 3);
    CHECK(s.relations.empty());
    CHECK(mc_defect(s).is_zero());
}

TEST_CASE("specializing all parameters to zero returns the base") {
    for (std::string name : {"d_11", "d_12", "d_14"}) {
        const auto s = extend_to_order(infinitesimal_deformation(get(name).formula), 3);
        CHECK(specialize(s, {}) == s.base);
    }
}

TEST_CASE("mc defect vanishes identically at order 1") {
    // the infinitesimal terms are cocycles, so the linear defect is zero
    for (std::string name : {"d_12", "d_14"}) {
        const auto s = infinitesimal_deformation(get(name).formula);
        CHECK(mc_defect(s).is_zero());
    }
}

TEST_CASE("d_13(0:0) relations cut out the two transversal planes") {
    const auto s = extend_to_order(infinitesimal_deformation(d13_formula(0, 0)), 3);
    REQUIRE(s.parameters.size() == 4);
    CHECK_FALSE(s.relations.empty());

    const auto ideal = obstruction_relations(s);
    REQUIRE(ideal.components.size() == 2);
    std::vector<std::vector<std::string>> components;
    for (const auto& c : ideal.components) components.push_back(c.vanishing);
    std::sort(components.begin(), components.end());
    CHECK(components[0] == std::vector<std::string>{"t1", "t2"});
    CHECK(components[1] == std::vector<std::string>{"t3", "t4"});

    // symbolic check: each plane annihilates every generator
    for (const auto& c : ideal.components) {
        std::map<std::string, Polynomial> plane;
        for (const auto& t : c.vanishing) plane[t] = Polynomial(0);
        for (const auto& g : ideal.generators) {
            CHECK(g.substitute(plane).is_zero());
        }
    }
    // a point off both planes violates at least one generator
    const std::map<std::string, Rational> off{{"t1", Rational(1)},
                                              {"t2", Rational(0)},
                                              {"t3", Rational(1)},
                                              {"t4", Rational(0)}};
    CHECK(std::any_of(ideal.generators.begin(), ideal.generators.end(),
                      [&off](const Polynomial& g) { return !g.evaluate(off).is_zero(); }));
}

TEST_CASE("stabilize matches extend_to_order on a closing computation") {
    const auto base = infinitesimal_deformation(d13_formula(0, 0));
    const auto a = stabilize(base, 4);
    const auto b = extend_to_order(base, a.order);
    CHECK(a.relations == b.relations);
    CHECK(a.current == b.current);
}

TEST_CASE("relation generators are normalized") {
    const auto s = extend_to_order(infinitesimal_deformation(d13_formula(0, 0)), 3);
    for (const auto& g : s.relations) {
        CHECK(g == g.normalized());
    }
}

TEST_CASE("custom infinitesimal bases are validated") {
    const auto d = get("d_11").formula;
    // wrong size
    CHECK_THROWS_AS(infinitesimal_deformation_with_basis(d, {}), std::invalid_argument);
    // not a cocycle
    CHECK_THROWS_AS(infinitesimal_deformation_with_basis(d, {term({2, 3}, 3)}),
                    std::invalid_argument);
    // not odd
    CHECK_THROWS_AS(infinitesimal_deformation_with_basis(d, {term({1, 1}, 1)}),
                    std::invalid_argument);
}

TEST_CASE("verify_jump: identity target at zero parameters") {
    const auto s = extend_to_order(infinitesimal_deformation(get("d_14").formula), 2);
    const auto check = verify_jump(s, {}, get("d_14").formula);
    CHECK(check.confirmed());
    REQUIRE(check.witness.has_value());
    CHECK(check.witness->matrix() == QMatrix::identity(3));
}

TEST_CASE("verify_jump rejects assignments that violate a relation") {
    const auto s = extend_to_order(infinitesimal_deformation(d13_formula(0, 0)), 3);
    const std::map<std::string, Rational> bad{
        {"t1", Rational(1)}, {"t2", Rational(1)}, {"t3", Rational(1)}, {"t4", Rational(1)}};
    CHECK_THROWS_AS(verify_jump(s, bad, get("d_10").formula), std::invalid_argument);
    CHECK_THROWS_AS(specialize(s, {{"t9", Rational(1)}}), std::invalid_argument);
}

TEST_CASE("d_11 jumps to d_1 at t = -1") {
    const auto d = get("d_11").formula;
    const auto s =
        extend_to_order(infinitesimal_deformation_with_basis(d, {term({2, 2}, 3)}), 4);
    const auto check = verify_jump(s, {{"t1", Rational(-1)}}, get("d_1").formula, 2);
    REQUIRE(check.confirmed());
    CHECK(verify_equivalence(specialize(s, {{"t1", Rational(-1)}}), get("d_1").formula,
                             *check.witness)
              .ok);
}

TEST_CASE("d_13(0:0) jumps inside the family along the second plane") {
    const auto s = extend_to_order(infinitesimal_deformation(d13_formula(0, 0)), 3);
    // the (t3,t4) plane reaches d_13(1:0) exactly
    const auto target = d13_formula(1, 0);
    const auto check = verify_jump(s, {{"t2", Rational(1)}}, target, 1);
    CHECK(check.confirmed());
}
