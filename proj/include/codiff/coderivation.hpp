#ifndef CODIFF_CODERIVATION_HPP
#define CODIFF_CODERIVATION_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "codiff/graded_space.hpp"
#include "codiff/polynomial.hpp"
#include "codiff/scalars.hpp"

namespace codiff {

// Canonical term order: arity, then lexicographic word, then target.
struct TermKey {
    Word word;
    int target = 0;

    friend bool operator<(const TermKey& a, const TermKey& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        if (a.word != b.word) return a.word < b.word;
        return a.target < b.target;
    }
    friend bool operator==(const TermKey& a, const TermKey& b) {
        return a.word == b.word && a.target == b.target;
    }
};

// Parity of the basis cochain phi^I_i: parity(I) + |v_i| mod 2.
inline int term_parity(const Word& word, int target, const GradedSpace& s) {
    return word_parity(word, s) ^ s.parity(target);
}

inline bool ring_is_zero(const Rational& r) { return r.is_zero(); }
inline bool ring_is_zero(const Polynomial& p) { return p.is_zero(); }

// A finite sum of basis terms phi^I_i with coefficients in R, viewed as a
// coderivation of the tensor coalgebra T(W). R is Rational or Polynomial.
template <class R>
class Coderivation {
public:
    using TermMap = std::map<TermKey, R>;

    Coderivation() = default;
    explicit Coderivation(const GradedSpace& s) : space_(s) {}

    const GradedSpace& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& word, int target, const R& coeff) {
        if (!space_.valid_word(word)) {
            throw std::out_of_range("coderivation term: word index out of range");
        }
        space_.parity(target);  // validates the target index
        if (ring_is_zero(coeff)) return;
        auto [it, inserted] = terms_.emplace(TermKey{word, target}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (ring_is_zero(it->second)) terms_.erase(it);
        }
    }

    // Common parity of all stored terms, or nullopt when mixed.
    // The zero coderivation is homogeneous of every parity; by convention
    // this returns 0 for it.
    std::optional<int> homogeneous_parity() const {
        int p = 0;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            const int tp = term_parity(key.word, key.target, space_);
            if (first) {
                p = tp;
                first = false;
            } else if (tp != p) {
                return std::nullopt;
            }
        }
        return p;
    }

    bool is_odd() const {
        auto p = homogeneous_parity();
        return p.has_value() && *p == 1;
    }

    // Arity when all terms share one; the zero coderivation reports -1.
    std::optional<int> homogeneous_arity() const {
        int a = -1;
        for (const auto& [key, c] : terms_) {
            const int n = static_cast<int>(key.word.size());
            if (a < 0) {
                a = n;
            } else if (a != n) {
                return std::nullopt;
            }
        }
        return a;
    }

    Coderivation operator-() const {
        Coderivation r(space_);
        for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
        return r;
    }

    Coderivation& operator+=(const Coderivation& rhs) {
        require_same_space(rhs);
        for (const auto& [key, c] : rhs.terms_) add_term(key.word, key.target, c);
        return *this;
    }
    Coderivation& operator-=(const Coderivation& rhs) {
        require_same_space(rhs);
        for (const auto& [key, c] : rhs.terms_) add_term(key.word, key.target, -c);
        return *this;
    }
    friend Coderivation operator+(Coderivation lhs, const Coderivation& rhs) {
        return lhs += rhs;
    }
    friend Coderivation operator-(Coderivation lhs, const Coderivation& rhs) {
        return lhs -= rhs;
    }
    Coderivation operator*(const R& c) const {
        Coderivation r(space_);
        for (const auto& [key, coeff] : terms_) r.add_term(key.word, key.target, coeff * c);
        return r;
    }
    friend bool operator==(const Coderivation& a, const Coderivation& b) {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Coderivation& a, const Coderivation& b) {
        return !(a == b);
    }

    void require_same_space(const Coderivation& other) const {
        if (space_ != other.space_) {
            throw std::invalid_argument("coderivations live on different spaces");
        }
    }

    template <class F>
    auto map_coefficients(F&& f) const {
        using S = decltype(f(std::declval<const R&>()));
        Coderivation<S> r(space_);
        for (const auto& [key, c] : terms_) r.add_term(key.word, key.target, f(c));
        return r;
    }

private:
    GradedSpace space_;
    TermMap terms_;
};

template <class R>
Coderivation<R> make_coderivation(
    const GradedSpace& s, std::initializer_list<std::tuple<Word, int, R>> terms) {
    Coderivation<R> d(s);
    for (const auto& [word, target, coeff] : terms) d.add_term(word, target, coeff);
    return d;
}

namespace detail {
template <class R>
int required_parity(const Coderivation<R>& f, const char* what) {
    auto p = f.homogeneous_parity();
    if (!p) {
        throw std::invalid_argument(std::string(what) +
                                    ": inhomogeneous coderivation; split by parity first");
    }
    return *p;
}
}  // namespace detail

// Composition from the insertion formula:
//   phi^I_i o phi^J_j = sum_k (-1)^{(|v_{i_1}|+...+|v_{i_{k-1}}|)|phi^J_j|}
//                       delta^{i_k}_j phi^{(I,J,k)}_i,
// where (I,J,k) replaces the k-th letter of I by J. Terms of arity 0
// contribute nothing (no insertion slot).
template <class R>
Coderivation<R> compose(const Coderivation<R>& f, const Coderivation<R>& g) {
    f.require_same_space(g);
    detail::required_parity(f, "compose");
    const int pg = detail::required_parity(g, "compose");
    const GradedSpace& s = f.space();

    Coderivation<R> r(s);
    for (const auto& [fk, a] : f.terms()) {
        const Word& I = fk.word;
        int prefix_parity = 0;
        for (std::size_t k = 0; k < I.size(); ++k) {
            for (const auto& [gk, b] : g.terms()) {
                if (I[k] != gk.target) continue;
                Word w;
                w.reserve(I.size() - 1 + gk.word.size());
                w.insert(w.end(), I.begin(), I.begin() + static_cast<long>(k));
                w.insert(w.end(), gk.word.begin(), gk.word.end());
                w.insert(w.end(), I.begin() + static_cast<long>(k) + 1, I.end());
                R c = a * b;
                if ((prefix_parity & pg) != 0) c = -c;
                r.add_term(w, fk.target, c);
            }
            prefix_parity ^= s.parity(I[k]);
        }
    }
    return r;
}

// Graded Lie bracket [f,g] = f o g - (-1)^{|f||g|} g o f.
template <class R>
Coderivation<R> bracket(const Coderivation<R>& f, const Coderivation<R>& g) {
    const int pf = detail::required_parity(f, "bracket");
    const int pg = detail::required_parity(g, "bracket");
    Coderivation<R> r = compose(f, g);
    Coderivation<R> gf = compose(g, f);
    if ((pf & pg) != 0) {
        r += gf;
    } else {
        r -= gf;
    }
    return r;
}

// Hochschild coboundary D(f) = [d,f] for an odd codifferential d.
template <class R>
Coderivation<R> coboundary(const Coderivation<R>& d, const Coderivation<R>& f) {
    if (!d.is_odd()) {
        throw std::invalid_argument("coboundary: d must be an odd coderivation");
    }
    return bracket(d, f);
}

// Evaluation of the coderivation extension on a tensor word:
//   f(v_1...v_n) = sum_i (-1)^{(v_1+...+v_i)|f|}
//                  v_1...v_i f(v_{i+1}...v_{i+k}) v_{i+k+1}...v_n.
// Arity-0 terms insert their target vector at every position.
template <class R>
std::map<Word, R> evaluate(const Coderivation<R>& f, const Word& w) {
    const int pf = detail::required_parity(f, "evaluate");
    const GradedSpace& s = f.space();
    if (!s.valid_word(w)) throw std::out_of_range("evaluate: word index out of range");

    std::map<Word, R> out;
    for (const auto& [key, c] : f.terms()) {
        const std::size_t k = key.word.size();
        if (k > w.size()) continue;
        int prefix_parity = 0;
        for (std::size_t start = 0; start + k <= w.size(); ++start) {
            if (std::equal(key.word.begin(), key.word.end(), w.begin() + static_cast<long>(start))) {
                Word result;
                result.reserve(w.size() - k + 1);
                result.insert(result.end(), w.begin(), w.begin() + static_cast<long>(start));
                result.push_back(key.target);
                result.insert(result.end(), w.begin() + static_cast<long>(start + k), w.end());
                R v = c;
                if ((prefix_parity & pf) != 0) v = -v;
                auto [it, inserted] = out.emplace(std::move(result), v);
                if (!inserted) {
                    it->second += v;
                    if (ring_is_zero(it->second)) out.erase(it);
                }
            }
            // arity-0 terms also insert after the last letter, so the final
            // iteration has start == w.size() and no letter to absorb
            if (start < w.size()) prefix_parity ^= s.parity(w[start]);
        }
    }
    return out;
}

// f applied as a plain cochain: target -> coefficient for terms whose word
// matches w exactly.
template <class R>
std::map<int, R> cochain_apply(const Coderivation<R>& f, const Word& w) {
    std::map<int, R> out;
    for (const auto& [key, c] : f.terms()) {
        if (key.word == w) out[key.target] = c;
    }
    return out;
}

template <class R>
struct CodifferentialCheck {
    bool ok = false;
    Coderivation<R> certificate;  // nonzero terms of [d,d] on failure
};

template <class R>
CodifferentialCheck<R> is_codifferential(const Coderivation<R>& d) {
    if (!d.is_zero() && !d.is_odd()) {
        throw std::invalid_argument("is_codifferential: d must be odd");
    }
    Coderivation<R> b = bracket(d, d);
    return CodifferentialCheck<R>{b.is_zero(), std::move(b)};
}

// Splits into (even part, odd part).
template <class R>
std::pair<Coderivation<R>, Coderivation<R>> parity_split(const Coderivation<R>& f) {
    Coderivation<R> even(f.space());
    Coderivation<R> odd(f.space());
    for (const auto& [key, c] : f.terms()) {
        (term_parity(key.word, key.target, f.space()) == 0 ? even : odd)
            .add_term(key.word, key.target, c);
    }
    return {even, odd};
}

inline std::string coeff_to_string(const Rational& r) { return r.str(); }
inline std::string coeff_to_string(const Polynomial& p) { return p.to_string(); }

// Renders in the text syntax the parser accepts, e.g.
// "psi(2,3;2) - psi(3,2;2) + psi(2,2;3) - psi(3,3;3)".
template <class R>
std::string to_string(const Coderivation<R>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        std::string cs = coeff_to_string(c);
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) out << "-";
            first = false;
        } else {
            out << (negated ? " - " : " + ");
        }
        if (cs != "1") {
            const bool composite = cs.find_first_of("+-*") != std::string::npos;
            out << (composite ? "(" + cs + ")" : cs) << "*";
        }
        out << (term_parity(key.word, key.target, f.space()) == 1 ? "psi(" : "phi(");
        for (std::size_t i = 0; i < key.word.size(); ++i) {
            if (i) out << ",";
            out << key.word[i];
        }
        out << ";" << key.target << ")";
    }
    return out.str();
}

}  // namespace codiff

#endif
