#ifndef CODIFF_CATALOG_HPP
#define CODIFF_CATALOG_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codiff/coderivation.hpp"

namespace codiff {

// The 2|1 space every catalog codifferential lives on.
const GradedSpace& catalog_space();

struct HPair {
    int even = 0;
    int odd = 0;
    friend bool operator==(const HPair& a, const HPair& b) {
        return a.even == b.even && a.odd == b.odd;
    }
};

using HRow = std::array<HPair, 5>;  // H^0 .. H^4

struct CatalogEntry {
    std::string name;  // d_1 .. d_15
    std::optional<std::pair<Rational, Rational>> params;
    Coderivation<Rational> formula;
    HRow expected_h;         // tabulated values, stored verbatim
    bool generic_row = false;  // expected_h is the family's generic row
    std::string opposite;      // name of the opposite-algebra partner, if tabulated
    std::string notes;         // known discrepancies between table/text and computation
    std::vector<int> disputed;  // degrees whose tabulated value conflicts with computation
};

// The 21 tabulated codifferentials: d_1..d_12, the four special points of
// d_13, d_14, and the four special points of d_15.
const std::vector<CatalogEntry>& tabulated_entries();

// Family formulas with the parameters taken literally (no projective
// normalization); used by the deformation engine.
Coderivation<Rational> d13_formula(const Rational& p, const Rational& q);
Coderivation<Rational> d15_formula(const Rational& p, const Rational& q);

// Entry lookup. d_13/d_15 accept arbitrary rational (p:q); the parameters
// are normalized projectively (first nonzero coordinate scaled to 1) and a
// non-tabulated point comes back carrying the family's generic row with
// generic_row set.
CatalogEntry get(const std::string& name,
                 std::optional<std::pair<Rational, Rational>> params = std::nullopt);

// Tabulated cohomology row; generic_row marks a fallback to the family row.
struct ExpectedCohomology {
    HRow h;
    bool generic_row = false;
};
ExpectedCohomology expected_cohomology(
    const std::string& name,
    std::optional<std::pair<Rational, Rational>> params = std::nullopt);

// 3x9 matrix form of an arity-2 coderivation: row = target index, column =
// input pair (j,k) in lexicographic order (1,1),(1,2),...,(3,3).
struct MatrixForm {
    std::array<std::array<Rational, 9>, 3> m{};
    friend bool operator==(const MatrixForm& a, const MatrixForm& b) { return a.m == b.m; }
};

MatrixForm to_matrix(const Coderivation<Rational>& d);
Coderivation<Rational> from_matrix(const MatrixForm& m);

}  // namespace codiff

#endif
