// Scalars, polynomials and exact linear algebra.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "codiff/polynomial.hpp"
#include "codiff/qmatrix.hpp"
#include "codiff/scalars.hpp"

using namespace codiff;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return make_rational(num(rng), den(rng));
}

Polynomial random_polynomial(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(0, 3);
    std::uniform_int_distribution<int> exp(0, 2);
    Polynomial p;
    const Polynomial t1 = Polynomial::variable("t1");
    const Polynomial t2 = Polynomial::variable("t2");
    for (int i = n_terms(rng); i > 0; --i) {
        Polynomial term{random_rational(rng)};
        for (int e = exp(rng); e > 0; --e) term *= t1;
        for (int e = exp(rng); e > 0; --e) term *= t2;
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("rational normalization") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(3, -6) == make_rational(-1, 2));
    CHECK(make_rational(0, 7) == Rational(0));
    CHECK(to_string(make_rational(3, -6)) == "-1/2");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational ring axioms on random values") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 100; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(Rational(1) * a == a);
    }
}

TEST_CASE("polynomial truncation") {
    const Polynomial t1 = Polynomial::variable("t1");
    const Polynomial t2 = Polynomial::variable("t2");
    const Polynomial p = Polynomial(1) + t1 + t1 * t2;
    CHECK(p.truncated(1) == Polynomial(1) + t1);
    CHECK((t1 * t1 * t2).truncated(3) == t1 * t1 * t2);
    CHECK(Polynomial().truncated(2) == Polynomial());
    CHECK(p.truncated(5) == p);
}

TEST_CASE("polynomial evaluation") {
    const Polynomial t1 = Polynomial::variable("t1");
    const Polynomial t2 = Polynomial::variable("t2");
    const Polynomial t3 = Polynomial::variable("t3");
    const Polynomial t4 = Polynomial::variable("t4");

    CHECK((t1 * t1 - t2).evaluate({{"t1", Rational(2)}, {"t2", Rational(1)}}) == Rational(3));
    CHECK(Polynomial(5).evaluate({}) == Rational(5));
    // the second solution plane t1 = t2 = 0 annihilates t1*t4 - t2*t3
    CHECK((t1 * t4 - t2 * t3)
              .evaluate({{"t1", Rational(0)},
                         {"t2", Rational(0)},
                         {"t3", Rational(1)},
                         {"t4", Rational(1)}}) == Rational(0));
    CHECK_THROWS_WITH_AS(t1.evaluate({}), "evaluate: missing variable t1",
                         std::invalid_argument);
}

TEST_CASE("polynomial ring axioms and evaluation homomorphism") {
    std::mt19937 rng(20240812);
    const std::map<std::string, Rational> at{{"t1", Rational(2, 3)}, {"t2", Rational(-5)}};
    for (int i = 0; i < 50; ++i) {
        const Polynomial a = random_polynomial(rng);
        const Polynomial b = random_polynomial(rng);
        const Polynomial c = random_polynomial(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(Polynomial(1) * a == a);
        CHECK((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
        CHECK((a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at));
    }
}

TEST_CASE("polynomial normalization and associates") {
    const Polynomial t1 = Polynomial::variable("t1");
    const Polynomial t2 = Polynomial::variable("t2");
    const Polynomial p = (t1 * t2 - t1 * t1) * Rational(-4, 6);
    const Polynomial n = p.normalized();
    CHECK(n == t1 * t1 - t1 * t2);
    CHECK(p.is_associate_of(n));
    CHECK_FALSE(p.is_associate_of(t1 * t2));
    CHECK_FALSE(Polynomial().is_associate_of(t1));
}

TEST_CASE("polynomial substitution and homogeneous parts") {
    const Polynomial t1 = Polynomial::variable("t1");
    const Polynomial t2 = Polynomial::variable("t2");
    const Polynomial p = t1 * t1 + t1 * t2 + t2;
    CHECK(p.substitute({{"t1", Polynomial(0)}}) == t2);
    CHECK(p.homogeneous_part(2) == t1 * t1 + t1 * t2);
    CHECK(p.total_degree() == 2);
    CHECK(Polynomial().total_degree() == -1);
    CHECK(p.variables() == std::vector<std::string>{"t1", "t2"});
}

TEST_CASE("qmatrix rref, rank, kernel and inverse") {
    QMatrix a(3, 3);
    a.at(0, 0) = Rational(1);
    a.at(0, 1) = Rational(2);
    a.at(0, 2) = Rational(3);
    a.at(1, 0) = Rational(2);
    a.at(1, 1) = Rational(4);
    a.at(1, 2) = Rational(6);
    a.at(2, 0) = Rational(0);
    a.at(2, 1) = Rational(1);
    a.at(2, 2) = Rational(1);
    CHECK(a.rank() == 2);
    const auto kernel = a.kernel_basis();
    REQUIRE(kernel.size() == 1);
    for (const auto& v : kernel) {
        QVector image = a.apply(v);
        for (const auto& x : image) CHECK(x == Rational(0));
    }

    QMatrix b = QMatrix::identity(3);
    b.at(0, 1) = Rational(5, 7);
    CHECK(b.inverse() * b == QMatrix::identity(3));
    CHECK_THROWS_AS(a.inverse(), std::invalid_argument);
}

TEST_CASE("image decomposition splits targets exactly") {
    QMatrix a(3, 2);
    a.at(0, 0) = Rational(1);
    a.at(1, 0) = Rational(1);
    a.at(1, 1) = Rational(1);
    const ImageDecomposition dec(a);
    CHECK(dec.rank() == 2);
    REQUIRE(dec.complement_rows().size() == 1);

    const QVector t{Rational(3), Rational(-1), Rational(7)};
    const auto split = dec.decompose(t);
    // A * preimage + residue == t, residue supported on the complement rows
    QVector back = a.apply(split.preimage);
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(back[i] + split.residue[i] == t[i]);
    }
    for (int r = 0; r < 3; ++r) {
        const bool in_complement = r == dec.complement_rows()[0];
        if (!in_complement) CHECK(split.residue[static_cast<std::size_t>(r)] == Rational(0));
    }
}
