#include "codiff/group_actions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace codiff {

namespace {

void require_parity_preserving(const GradedSpace& s, const QMatrix& m) {
    const int n = s.total_dim();
    if (m.rows() != n || m.cols() != n) {
        throw std::invalid_argument("automorphism matrix has the wrong shape");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (s.parity(i + 1) != s.parity(j + 1) && !m.at(i, j).is_zero()) {
                throw std::invalid_argument("automorphism must preserve parity blocks");
            }
        }
    }
}

}  // namespace

LinearAutomorphism::LinearAutomorphism(const GradedSpace& s, QMatrix matrix)
    : space_(s), matrix_(std::move(matrix)) {
    require_parity_preserving(s, matrix_);
    inverse_ = matrix_.inverse();  // throws on a singular matrix
}

LinearAutomorphism LinearAutomorphism::identity(const GradedSpace& s) {
    return LinearAutomorphism(s, QMatrix::identity(s.total_dim()));
}

LinearAutomorphism LinearAutomorphism::diagonal(const GradedSpace& s, const QVector& entries) {
    const int n = s.total_dim();
    if (static_cast<int>(entries.size()) != n) {
        throw std::invalid_argument("diagonal: wrong number of entries");
    }
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = entries[static_cast<std::size_t>(i)];
    return LinearAutomorphism(s, std::move(m));
}

LinearAutomorphism LinearAutomorphism::transposition(const GradedSpace& s, int i, int j) {
    if (s.parity(i) != s.parity(j)) {
        throw std::invalid_argument("transposition must stay inside a parity block");
    }
    QMatrix m = QMatrix::identity(s.total_dim());
    m.at(i - 1, i - 1) = 0;
    m.at(j - 1, j - 1) = 0;
    m.at(i - 1, j - 1) = 1;
    m.at(j - 1, i - 1) = 1;
    return LinearAutomorphism(s, std::move(m));
}

LinearAutomorphism LinearAutomorphism::compose_with(const LinearAutomorphism& inner) const {
    return LinearAutomorphism(space_, matrix_ * inner.matrix_);
}

Coderivation<Rational> pullback(const LinearAutomorphism& g, const Coderivation<Rational>& d) {
    const GradedSpace& s = d.space();
    if (s != g.space()) throw std::invalid_argument("pullback: space mismatch");
    const QMatrix& m = g.matrix();
    const QMatrix& minv = g.inverse_matrix();

    Coderivation<Rational> out(s);
    std::vector<int> arities;
    for (const auto& [key, c] : d.terms()) {
        const int n = static_cast<int>(key.word.size());
        if (std::find(arities.begin(), arities.end(), n) == arities.end()) arities.push_back(n);
    }

    for (int n : arities) {
        for (const Word& input : enumerate_words(n, s)) {
            for (const auto& [key, c] : d.terms()) {
                if (static_cast<int>(key.word.size()) != n) continue;
                // coefficient of v_K in (g v_{j_1}) ... (g v_{j_n})
                Rational prod = c;
                bool zero = false;
                for (int t = 0; t < n && !zero; ++t) {
                    const Rational& entry = m.at(key.word[static_cast<std::size_t>(t)] - 1,
                                                 input[static_cast<std::size_t>(t)] - 1);
                    if (entry.is_zero()) {
                        zero = true;
                    } else {
                        prod *= entry;
                    }
                }
                if (zero) continue;
                for (int target = 1; target <= s.total_dim(); ++target) {
                    const Rational& entry = minv.at(target - 1, key.target - 1);
                    if (!entry.is_zero()) out.add_term(input, target, prod * entry);
                }
            }
        }
    }
    return out;
}

BetaShift::BetaShift(Coderivation<Rational> beta) : beta_(std::move(beta)) {
    const GradedSpace& s = beta_.space();
    const auto arity = beta_.homogeneous_arity();
    if (!beta_.is_zero() && (!arity || *arity != 1)) {
        throw std::invalid_argument("beta shift must have arity 1");
    }
    if (!beta_.is_zero() && beta_.is_odd()) {
        throw std::invalid_argument("beta shift must be an even map");
    }
    const int n = s.total_dim();
    matrix_ = QMatrix(n, n);
    for (const auto& [key, c] : beta_.terms()) {
        matrix_.at(key.target - 1, key.word[0] - 1) = c;
    }
    if (!(matrix_ * matrix_).is_zero()) {
        throw std::invalid_argument("beta shift must be nilpotent of order 2");
    }
}

Coderivation<Rational> BetaShift::act(const Coderivation<Rational>& d) const {
    if (beta_.is_zero()) return d;
    Coderivation<Rational> result = d;
    Coderivation<Rational> current = d;
    Rational factorial(1);
    constexpr int kMaxIterations = 16;
    for (int k = 1; k <= kMaxIterations; ++k) {
        current = bracket(current, beta_);
        if (current.is_zero()) return result;
        factorial *= k;
        result += current * (Rational(1) / factorial);
    }
    throw std::logic_error("beta action failed to terminate");
}

LinearAutomorphism BetaShift::as_linear_map() const {
    QMatrix m = QMatrix::identity(beta_.space().total_dim());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) += matrix_.at(i, j);
    }
    return LinearAutomorphism(beta_.space(), std::move(m));
}

Coderivation<Rational> opposite(const Coderivation<Rational>& d) {
    const GradedSpace& s = d.space();
    Coderivation<Rational> out(s);
    for (const auto& [key, c] : d.terms()) {
        if (key.word.size() != 2) {
            throw std::invalid_argument("opposite: arity-2 coderivations only");
        }
        const int j = key.word[0];
        const int k = key.word[1];
        const Rational coeff = (s.parity(j) & s.parity(k)) != 0 ? Rational(-c) : c;
        out.add_term({k, j}, key.target, coeff);
    }
    return out;
}

EquivalenceCheck verify_equivalence(const Coderivation<Rational>& d,
                                    const Coderivation<Rational>& d2,
                                    const LinearAutomorphism& g) {
    Coderivation<Rational> diff = pullback(g, d) - d2;
    return EquivalenceCheck{diff.is_zero(), std::move(diff)};
}

namespace {

std::vector<Rational> candidate_values(int effort) {
    std::vector<Rational> v{Rational(1), Rational(-1)};
    if (effort >= 2) {
        for (long k : {2L, 3L}) {
            v.emplace_back(k);
            v.emplace_back(-k);
            v.push_back(Rational(1, k));
            v.push_back(Rational(-1, k));
        }
    }
    if (effort >= 3) {
        for (long k : {4L, 5L, 6L}) {
            v.emplace_back(k);
            v.emplace_back(-k);
            v.push_back(Rational(1, k));
            v.push_back(Rational(-1, k));
        }
    }
    return v;
}

// All parity-preserving permutation matrices, identity first.
std::vector<LinearAutomorphism> permutations(const GradedSpace& s) {
    std::vector<int> evens(static_cast<std::size_t>(s.even_dim));
    std::iota(evens.begin(), evens.end(), 1);
    std::vector<int> odds(static_cast<std::size_t>(s.odd_dim));
    std::iota(odds.begin(), odds.end(), s.even_dim + 1);

    std::vector<LinearAutomorphism> out;
    std::vector<int> pe = evens;
    do {
        std::vector<int> po = odds;
        do {
            QMatrix m(s.total_dim(), s.total_dim());
            for (std::size_t i = 0; i < pe.size(); ++i) {
                m.at(pe[i] - 1, static_cast<int>(i)) = 1;
            }
            for (std::size_t i = 0; i < po.size(); ++i) {
                m.at(po[i] - 1, s.even_dim + static_cast<int>(i)) = 1;
            }
            out.emplace_back(s, std::move(m));
        } while (std::next_permutation(po.begin(), po.end()));
    } while (std::next_permutation(pe.begin(), pe.end()));
    return out;
}

// Same-parity index pairs (a,b), a != b, for unipotent factors I + u E_ab.
std::vector<std::pair<int, int>> unipotent_slots(const GradedSpace& s) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= s.total_dim(); ++a) {
        for (int b = 1; b <= s.total_dim(); ++b) {
            if (a != b && s.parity(a) == s.parity(b)) out.emplace_back(a, b);
        }
    }
    return out;
}

}  // namespace

std::optional<LinearAutomorphism> find_witness(const Coderivation<Rational>& d,
                                               const Coderivation<Rational>& d2,
                                               int effort) {
    const GradedSpace& s = d.space();
    const std::vector<Rational> values = candidate_values(effort);
    const std::vector<LinearAutomorphism> perms = permutations(s);
    const std::vector<std::pair<int, int>> slots = unipotent_slots(s);
    const int n = s.total_dim();

    std::vector<QMatrix> unipotents{QMatrix::identity(n)};
    if (effort >= 2) {
        for (const auto& [a, b] : slots) {
            for (const Rational& u : values) {
                QMatrix m = QMatrix::identity(n);
                m.at(a - 1, b - 1) = u;
                unipotents.push_back(std::move(m));
            }
        }
    }

    QVector diag(static_cast<std::size_t>(n), Rational(1));
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    while (true) {
        for (int i = 0; i < n; ++i) {
            diag[static_cast<std::size_t>(i)] = values[choice[static_cast<std::size_t>(i)]];
        }
        for (const LinearAutomorphism& p : perms) {
            for (const QMatrix& u : unipotents) {
                QMatrix dm(n, n);
                for (int i = 0; i < n; ++i) dm.at(i, i) = diag[static_cast<std::size_t>(i)];
                LinearAutomorphism g(s, p.matrix() * dm * u);
                if (verify_equivalence(d, d2, g).ok) return g;
            }
        }
        // next diagonal in odometer order
        std::size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < values.size()) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size()) break;
    }
    return std::nullopt;
}

}  // namespace codiff
