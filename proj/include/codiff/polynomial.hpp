#ifndef CODIFF_POLYNOMIAL_HPP
#define CODIFF_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "codiff/scalars.hpp"

namespace codiff {

// Monomial in the deformation parameters: variable name -> positive exponent.
using Monomial = std::map<std::string, int>;

int monomial_degree(const Monomial& m);

// Graded-lexicographic order: total degree first, then the natural
// lexicographic order on (name, exponent) pairs. Deterministic output
// ordering everywhere depends on this.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over the rationals. Used as the
// coefficient ring of formal deformations, truncated at a total degree.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT: ring literal
    explicit Polynomial(const Rational& c);
    static Polynomial variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    int total_degree() const;  // -1 for the zero polynomial

    // Sorted list of variables that actually occur.
    std::vector<std::string> variables() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial operator*(const Rational& c) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b);

    // Drops every term of total degree > max_total_degree.
    Polynomial truncated(int max_total_degree) const;

    // Keeps only the terms of total degree exactly k.
    Polynomial homogeneous_part(int k) const;

    // Exact evaluation; every occurring variable must be assigned.
    Rational evaluate(const std::map<std::string, Rational>& assignment) const;

    // Substitutes polynomials for variables (variables without an entry
    // are left alone).
    Polynomial substitute(const std::map<std::string, Polynomial>& subs) const;

    // Scales so the coefficients have content 1 and the leading
    // (graded-lex greatest) monomial has positive coefficient.
    Polynomial normalized() const;

    // True when p = c*q for some nonzero rational c.
    bool is_associate_of(const Polynomial& other) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

}  // namespace codiff

#endif
