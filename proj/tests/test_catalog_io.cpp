// Catalog entries, matrix forms, the text parser and JSON round-trips.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "codiff/catalog.hpp"
#include "codiff/json_io.hpp"
#include "codiff/parser.hpp"

using namespace codiff;

namespace {
const GradedSpace kSpace{2, 1};

Coderivation<Rational> term(const Word& w, int target, long c = 1) {
    Coderivation<Rational> d(kSpace);
    d.add_term(w, target, Rational(c));
    return d;
}
}  // namespace

TEST_CASE("catalog lists the 21 tabulated codifferentials") {
    const auto& entries = tabulated_entries();
    CHECK(entries.size() == 21);
    for (const auto& e : entries) {
        CHECK(is_codifferential(e.formula).ok);
        CHECK_FALSE(e.generic_row);
    }
}

TEST_CASE("catalog lookup and projective normalization") {
    CHECK(get("d_1").formula ==
          term({2, 3}, 2) - term({3, 2}, 2) + term({2, 2}, 3) - term({3, 3}, 3));
    CHECK(get("d_13", std::make_pair(Rational(1), Rational(-1))).formula ==
          term({2, 2}, 3) + term({2, 1}, 3) - term({1, 2}, 3));
    // d_15(0:0) is the zero codifferential
    CHECK(get("d_15", std::make_pair(Rational(0), Rational(0))).formula.is_zero());
    // (2:2) normalizes onto the tabulated point (1:1)
    const auto e = get("d_13", std::make_pair(Rational(2), Rational(2)));
    CHECK(e.params == std::make_pair(Rational(1), Rational(1)));
    CHECK_FALSE(e.generic_row);
    // a non-tabulated point falls back to the generic family row
    CHECK(get("d_13", std::make_pair(Rational(1), Rational(7))).generic_row);
    CHECK(expected_cohomology("d_13", std::make_pair(Rational(1), Rational(7))).generic_row);

    CHECK_THROWS_AS(get("d_16"), std::invalid_argument);
    CHECK_THROWS_AS(get("d_13"), std::invalid_argument);
    CHECK_THROWS_AS(get("d_1", std::make_pair(Rational(1), Rational(0))),
                    std::invalid_argument);
}

TEST_CASE("tabulated cohomology rows") {
    const auto d13_10 = expected_cohomology("d_13", std::make_pair(Rational(1), Rational(0)));
    CHECK(d13_10.h == HRow{{{1, 0}, {2, 0}, {4, 1}, {6, 2}, {8, 3}}});
    const auto d15_1m1 = expected_cohomology("d_15", std::make_pair(Rational(1), Rational(-1)));
    CHECK(d15_1m1.h == HRow{{{2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}}});
    CHECK(expected_cohomology("d_9").h == HRow{{{3, 0}, {4, 0}, {6, 0}, {12, 0}, {24, 0}}});
}

TEST_CASE("documented discrepancies carry notes") {
    for (const auto& e : tabulated_entries()) {
        if (!e.disputed.empty()) CHECK_FALSE(e.notes.empty());
        for (int degree : e.disputed) {
            CHECK(degree >= 0);
            CHECK(degree <= 4);
        }
    }
    CHECK(get("d_9").disputed == std::vector<int>{0});
    CHECK(get("d_10").disputed == std::vector<int>{0});
    CHECK(get("d_14").disputed == std::vector<int>{2});
}

TEST_CASE("matrix form round-trips") {
    const auto m = to_matrix(get("d_2").formula);
    // d_2 = psi(3,3;3) + psi(3,1;1) + psi(3,2;2): columns 7,8,9 in lex order
    CHECK(m.m[0][6] == Rational(1));
    CHECK(m.m[1][7] == Rational(1));
    CHECK(m.m[2][8] == Rational(1));
    CHECK(from_matrix(m) == get("d_2").formula);

    CHECK(to_matrix(Coderivation<Rational>(kSpace)) == MatrixForm{});
    CHECK(from_matrix(MatrixForm{}).is_zero());

    for (const auto& e : tabulated_entries()) {
        if (e.formula.is_zero()) continue;
        CHECK(from_matrix(to_matrix(e.formula)) == e.formula);
    }
    CHECK_THROWS_AS(to_matrix(term({1}, 1)), std::invalid_argument);
}

TEST_CASE("text parser accepts the catalog syntax") {
    CHECK(parse_coderivation("psi(2,3;2) - psi(3,2;2) + psi(2,2;3) - psi(3,3;3)", kSpace) ==
          get("d_1").formula);
    CHECK(parse_coderivation("0", kSpace).is_zero());
    CHECK(parse_coderivation("1/2*phi(1;2) - 3*phi(2;1)", kSpace) ==
          term({1}, 2) * Rational(1, 2) - term({2}, 1) * Rational(3));
    // every catalog formula round-trips through its rendering
    for (const auto& e : tabulated_entries()) {
        CHECK(parse_coderivation(to_string(e.formula), kSpace) == e.formula);
    }
}

TEST_CASE("parser accepts deformation parameters") {
    const auto d = parse_poly_coderivation("psi(2,2;3) + t1*psi(2,1;3) - t2^2*psi(1,2;3)", kSpace);
    const Polynomial t1 = Polynomial::variable("t1");
    const Polynomial t2 = Polynomial::variable("t2");
    Coderivation<Polynomial> expected(kSpace);
    expected.add_term({2, 2}, 3, Polynomial(1));
    expected.add_term({2, 1}, 3, t1);
    expected.add_term({1, 2}, 3, -(t2 * t2));
    CHECK(d == expected);
    // and the rendering round-trips
    CHECK(parse_poly_coderivation(to_string(d), kSpace) == d);
}

TEST_CASE("parse errors name the position") {
    CHECK_THROWS_WITH_AS(parse_coderivation("psi(2,2;4)", kSpace),
                         doctest::Contains("position"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_coderivation("phi(2,2;3)", kSpace),
                         doctest::Contains("opposite parity"), std::invalid_argument);
    CHECK_THROWS_AS(parse_coderivation("psi(2,2;3) +", kSpace), std::invalid_argument);
    CHECK_THROWS_AS(parse_coderivation("t1*psi(2,2;3)", kSpace), std::invalid_argument);
    CHECK_THROWS_AS(parse_coderivation("", kSpace), std::invalid_argument);
}

TEST_CASE("projective pairs and rationals parse") {
    CHECK(parse_projective_pair("1:-1") == std::make_pair(Rational(1), Rational(-1)));
    CHECK(parse_projective_pair("(2/3:5)") == std::make_pair(Rational(2, 3), Rational(5)));
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK_THROWS_AS(parse_projective_pair("1:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("JSON round-trips") {
    SUBCASE("rational") {
        const Rational r(-22, 7);
        CHECK(rational_from_json(to_json(r)) == r);
        CHECK(to_json(r)["num"] == "-22");
        CHECK(to_json(r)["den"] == "7");
    }
    SUBCASE("polynomial") {
        const Polynomial p = Polynomial::variable("t1") * Polynomial::variable("t2") +
                             Polynomial(Rational(1, 2));
        CHECK(polynomial_from_json(to_json(p)) == p);
        CHECK(polynomial_from_json(to_json(Polynomial())) == Polynomial());
    }
    SUBCASE("graded space and coderivations") {
        CHECK(space_from_json(to_json(kSpace)) == kSpace);
        for (const auto& e : tabulated_entries()) {
            CHECK(coderivation_from_json(to_json(e.formula)) == e.formula);
        }
        const auto s = extend_to_order(infinitesimal_deformation(d13_formula(0, 0)), 2);
        CHECK(poly_coderivation_from_json(to_json(s.current)) == s.current);
    }
    SUBCASE("matrices and automorphisms") {
        QMatrix m = QMatrix::identity(3);
        m.at(0, 1) = Rational(5, 9);
        CHECK(qmatrix_from_json(to_json(m)) == m);
        const LinearAutomorphism g(kSpace, m);
        const auto g2 = automorphism_from_json(to_json(g), kSpace);
        CHECK(g2.matrix() == g.matrix());
    }
    SUBCASE("extension data") {
        ExtensionDatum e;
        e.space = kSpace;
        e.m_indices = {1};
        e.w_indices = {2, 3};
        e.delta = term({2, 2}, 3);
        e.mu = Coderivation<Rational>(kSpace);
        e.lambda = Coderivation<Rational>(kSpace);
        e.psi = term({2, 3}, 1) - term({3, 2}, 1);
        const auto e2 = extension_from_json(to_json(e));
        CHECK(e2.m_indices == e.m_indices);
        CHECK(e2.w_indices == e.w_indices);
        CHECK(e2.delta == e.delta);
        CHECK(e2.psi == e.psi);
    }
}

TEST_CASE("golden catalog data file matches the built-in catalog") {
    std::ifstream in(std::string(CODIFF_DATA_DIR) + "/catalog.json");
    REQUIRE_MESSAGE(in.good(), "data/catalog.json missing");
    json doc = json::parse(in);

    REQUIRE(doc["entries"].size() == tabulated_entries().size());
    CHECK(space_from_json(doc["space"]) == catalog_space());
    for (std::size_t i = 0; i < tabulated_entries().size(); ++i) {
        const auto& e = tabulated_entries()[i];
        const json& j = doc["entries"][i];
        CHECK(j["name"] == e.name);
        CHECK(coderivation_from_json(j["formula"]) == e.formula);
        if (e.params) {
            CHECK(rational_from_json(j["params"][0]) == e.params->first);
            CHECK(rational_from_json(j["params"][1]) == e.params->second);
        } else {
            CHECK(j["params"].is_null());
        }
        const json& h = j["expected_h"];
        REQUIRE(h.size() == 5);
        for (int n = 0; n <= 4; ++n) {
            CHECK(h[static_cast<std::size_t>(n)][0] ==
                  e.expected_h[static_cast<std::size_t>(n)].even);
            CHECK(h[static_cast<std::size_t>(n)][1] ==
                  e.expected_h[static_cast<std::size_t>(n)].odd);
        }
    }
}
