#include "codiff/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace codiff {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [name, e] : m) d += e;
    return d;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    const int da = monomial_degree(a);
    const int db = monomial_degree(b);
    if (da != db) return da < db;
    return a < b;
}

Polynomial::Polynomial(const Rational& c) {
    if (!codiff::is_zero(c)) terms_[Monomial{}] = c;
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.terms_[Monomial{{name, 1}}] = Rational(1);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.rbegin()->first);
}

std::vector<std::string> Polynomial::variables() const {
    std::set<std::string> names;
    for (const auto& [m, c] : terms_) {
        for (const auto& [name, e] : m) names.insert(name);
    }
    return {names.begin(), names.end()};
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!codiff::is_zero(c)) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (codiff::is_zero(it->second)) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial r;
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m = ma;
            for (const auto& [name, e] : mb) m[name] += e;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r;
    if (codiff::is_zero(c)) return r;
    for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff * c;
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

Polynomial Polynomial::truncated(int max_total_degree) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (monomial_degree(m) <= max_total_degree) r.terms_[m] = c;
    }
    return r;
}

Polynomial Polynomial::homogeneous_part(int k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (monomial_degree(m) == k) r.terms_[m] = c;
    }
    return r;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [name, e] : m) {
            auto it = assignment.find(name);
            if (it == assignment.end()) {
                throw std::invalid_argument("evaluate: missing variable " + name);
            }
            for (int i = 0; i < e; ++i) v *= it->second;
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& subs) const {
    Polynomial total;
    for (const auto& [m, c] : terms_) {
        Polynomial v{c};
        for (const auto& [name, e] : m) {
            auto it = subs.find(name);
            const Polynomial factor =
                it == subs.end() ? Polynomial::variable(name) : it->second;
            for (int i = 0; i < e; ++i) v *= factor;
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return {};
    // content = gcd of numerators / lcm of denominators
    Integer num_gcd(0);
    Integer den_lcm(1);
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational scale(den_lcm, num_gcd);
    if (terms_.rbegin()->second * scale < 0) scale = -scale;
    return *this * scale;
}

bool Polynomial::is_associate_of(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
    return normalized() == other.normalized();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print leading (highest) monomials first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = (mag == 1);
        if (!unit || m.empty()) out << mag.str();
        bool star = !unit && !m.empty();
        for (const auto& [name, e] : m) {
            if (star) out << "*";
            out << name;
            if (e > 1) out << "^" << e;
            star = true;
        }
    }
    return out.str();
}

}  // namespace codiff
