#include "codiff/extensions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "codiff/catalog.hpp"

namespace codiff {

namespace {

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

// counts (m_letters, w_letters) of a word under the datum's split
std::pair<int, int> split_counts(const ExtensionDatum& e, const Word& w) {
    int m = 0;
    int ww = 0;
    for (int i : w) {
        if (contains(e.m_indices, i)) {
            ++m;
        } else if (contains(e.w_indices, i)) {
            ++ww;
        } else {
            throw std::invalid_argument("extension split does not cover index " +
                                        std::to_string(i));
        }
    }
    return {m, ww};
}

void check_sector(const ExtensionDatum& e, const Coderivation<Rational>& c,
                  int m_inputs, int w_inputs, bool target_in_m, const char* name) {
    for (const auto& [key, coeff] : c.terms()) {
        const auto [m, w] = split_counts(e, key.word);
        const bool target_ok = target_in_m ? contains(e.m_indices, key.target)
                                           : contains(e.w_indices, key.target);
        if (m != m_inputs || w != w_inputs || !target_ok) {
            throw std::invalid_argument(std::string("extension component ") + name +
                                        " leaves its sector at term " +
                                        to_string(make_coderivation<Rational>(
                                            e.space, {{key.word, key.target, Rational(1)}})));
        }
    }
}

}  // namespace

void ExtensionDatum::validate() const {
    for (int i : m_indices) space.parity(i);
    for (int i : w_indices) space.parity(i);
    for (const auto* c : {&delta, &mu, &lambda, &psi}) {
        if (c->space() != space) {
            throw std::invalid_argument("extension component lives on a different space");
        }
    }
    check_sector(*this, delta, 0, 2, false, "delta");
    check_sector(*this, mu, 2, 0, true, "mu");
    check_sector(*this, lambda, 1, 1, true, "lambda");
    check_sector(*this, psi, 0, 2, true, "psi");
}

Coderivation<Rational> ExtensionDatum::assembled() const {
    return delta + mu + lambda + psi;
}

ExtensionReport check_extension(const ExtensionDatum& e) {
    e.validate();
    const Rational half(1, 2);

    ExtensionReport r;
    r.mc_defect = bracket(e.delta, e.lambda) + bracket(e.lambda, e.lambda) * half +
                  bracket(e.mu, e.psi);
    r.compatibility_defect = bracket(e.mu, e.lambda);
    r.cocycle_defect = bracket(e.delta + e.lambda, e.psi);
    r.maurer_cartan = r.mc_defect.is_zero();
    r.compatibility = r.compatibility_defect.is_zero();
    r.cocycle = r.cocycle_defect.is_zero();
    return r;
}

ExtensionDatum restricted_equivalence(const ExtensionDatum& e,
                                      const Coderivation<Rational>& beta) {
    e.validate();
    for (const auto& [key, c] : beta.terms()) {
        const auto [m, w] = split_counts(e, key.word);
        if (key.word.size() != 1 || w != 1 || !contains(e.m_indices, key.target)) {
            throw std::invalid_argument("beta must lie in C^{0,1} for the datum's split");
        }
    }
    const Rational half(1, 2);
    const Coderivation<Rational> mu_beta = bracket(e.mu, beta);

    ExtensionDatum out = e;
    out.lambda = e.lambda + mu_beta;
    out.psi = e.psi + bracket(e.delta + e.lambda + mu_beta * half, beta);
    return out;
}

Coderivation<Rational> assemble_lambda(const GradedSpace& space,
                                       const std::vector<int>& m_indices, int w_index,
                                       const QMatrix& left, const QMatrix& right) {
    const int q = static_cast<int>(m_indices.size());
    if (left.rows() != q || left.cols() != q || right.rows() != q || right.cols() != q) {
        throw std::invalid_argument("assemble_lambda: matrix shape mismatch");
    }
    Coderivation<Rational> lambda(space);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            if (!left.at(i, j).is_zero()) {
                lambda.add_term({w_index, m_indices[static_cast<std::size_t>(j)]},
                                m_indices[static_cast<std::size_t>(i)], left.at(i, j));
            }
            if (!right.at(i, j).is_zero()) {
                lambda.add_term({m_indices[static_cast<std::size_t>(j)], w_index},
                                m_indices[static_cast<std::size_t>(i)], right.at(i, j));
            }
        }
    }
    return lambda;
}

std::vector<LRMatrices> enumerate_simple01_solutions() {
    const GradedSpace& s = catalog_space();
    Coderivation<Rational> delta(s);
    delta.add_term({3, 3}, 3, Rational(1));

    auto diag = [](long a, long b) {
        QMatrix m(2, 2);
        m.at(0, 0) = a;
        m.at(1, 1) = b;
        return m;
    };

    // L eigenvalues in {0,1}, R eigenvalues in {0,-1}; representatives up
    // to simultaneously reordering the diagonal. R = diag(0,-1) only stays
    // inequivalent to diag(-1,0) when L = diag(1,0) breaks the symmetry.
    std::vector<std::pair<QMatrix, QMatrix>> pairs;
    for (const QMatrix& l : {diag(1, 1), diag(0, 0)}) {
        for (const QMatrix& r : {diag(-1, -1), diag(-1, 0), diag(0, 0)}) {
            pairs.emplace_back(l, r);
        }
    }
    for (const QMatrix& r : {diag(-1, -1), diag(-1, 0), diag(0, -1), diag(0, 0)}) {
        pairs.emplace_back(diag(1, 0), r);
    }

    std::vector<LRMatrices> out;
    for (const auto& [l, r] : pairs) {
        LRMatrices sol{l, r, delta + assemble_lambda(s, {1, 2}, 3, l, r)};
        out.push_back(std::move(sol));
    }
    return out;
}

}  // namespace codiff
