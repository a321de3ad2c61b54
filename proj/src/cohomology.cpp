#include "codiff/cohomology.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace codiff {

namespace {

std::map<TermKey, int> index_of(const std::vector<TermKey>& basis) {
    std::map<TermKey, int> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
    return idx;
}

QVector coords_of(const Coderivation<Rational>& f, const std::map<TermKey, int>& idx,
                  std::size_t dim, const char* what) {
    QVector v(dim);
    for (const auto& [key, c] : f.terms()) {
        auto it = idx.find(key);
        if (it == idx.end()) {
            throw std::invalid_argument(std::string(what) +
                                        ": term outside the expected cochain sector");
        }
        v[static_cast<std::size_t>(it->second)] = c;
    }
    return v;
}

Coderivation<Rational> element_of(const QVector& v, const std::vector<TermKey>& basis,
                                  const GradedSpace& s) {
    Coderivation<Rational> f(s);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!v[i].is_zero()) f.add_term(basis[i].word, basis[i].target, v[i]);
    }
    return f;
}

void require_codifferential(const Coderivation<Rational>& d, bool allow) {
    if (!d.is_zero() && !d.is_odd()) {
        throw std::invalid_argument("coboundary matrix: d must be odd");
    }
    if (!allow && !is_codifferential(d).ok) {
        throw std::invalid_argument("coboundary matrix: [d,d] != 0 (pass the override to proceed)");
    }
}

}  // namespace

std::vector<TermKey> cochain_basis(const GradedSpace& s, int n, int parity) {
    std::vector<TermKey> basis;
    for (const Word& w : enumerate_words(n, s)) {
        for (int target = 1; target <= s.total_dim(); ++target) {
            if (term_parity(w, target, s) == parity) basis.push_back(TermKey{w, target});
        }
    }
    return basis;
}

CoboundaryMatrix coboundary_matrix(const Coderivation<Rational>& d, int n, int parity,
                                   bool allow_non_codifferential) {
    require_codifferential(d, allow_non_codifferential);
    const GradedSpace& s = d.space();

    CoboundaryMatrix out;
    out.degree = n;
    out.domain_parity = parity;
    out.domain = cochain_basis(s, n, parity);
    out.codomain = cochain_basis(s, n + 1, parity ^ 1);
    out.matrix = QMatrix(static_cast<int>(out.codomain.size()),
                         static_cast<int>(out.domain.size()));

    const auto row_of = index_of(out.codomain);
    for (std::size_t col = 0; col < out.domain.size(); ++col) {
        Coderivation<Rational> f(s);
        f.add_term(out.domain[col].word, out.domain[col].target, Rational(1));
        const Coderivation<Rational> df = bracket(d, f);
        for (const auto& [key, c] : df.terms()) {
            auto it = row_of.find(key);
            if (it == row_of.end()) {
                throw std::logic_error("coboundary image escaped the expected sector");
            }
            out.matrix.at(it->second, static_cast<int>(col)) = c;
        }
    }
    return out;
}

CohomologyReport cohomology_dims(const Coderivation<Rational>& d, int n_max) {
    require_codifferential(d, false);
    const GradedSpace& s = d.space();

    // ranks[n][p] = rank of D restricted to parity sector p of C^n
    std::vector<std::array<int, 2>> ranks(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        for (int p = 0; p < 2; ++p) {
            ranks[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)] =
                coboundary_matrix(d, n, p).matrix.rank();
        }
    }

    CohomologyReport report;
    for (int n = 0; n <= n_max; ++n) {
        const SectorDims dims = cochain_dims(n, s);
        CohomologyReport::Degree deg;
        deg.z.even = dims.even - ranks[static_cast<std::size_t>(n)][0];
        deg.z.odd = dims.odd - ranks[static_cast<std::size_t>(n)][1];
        // D flips parity: coboundaries in the even sector of C^n come from
        // the odd sector of C^{n-1}
        deg.b.even = n == 0 ? 0 : ranks[static_cast<std::size_t>(n) - 1][1];
        deg.b.odd = n == 0 ? 0 : ranks[static_cast<std::size_t>(n) - 1][0];
        deg.h.even = deg.z.even - deg.b.even;
        deg.h.odd = deg.z.odd - deg.b.odd;
        report.per_degree.push_back(deg);
    }
    return report;
}

std::vector<Coderivation<Rational>> cohomology_basis(const Coderivation<Rational>& d, int n) {
    const GradedSpace& s = d.space();
    std::vector<Coderivation<Rational>> reps;

    for (int parity = 0; parity < 2; ++parity) {
        const CoboundaryMatrix cocycle = coboundary_matrix(d, n, parity);
        const std::size_t dim = cocycle.domain.size();

        // Echelon basis holding im(D) plus the accepted representatives;
        // reduce() returns the canonical reduced form of a vector.
        struct EchelonRow {
            std::size_t pivot;
            QVector v;
        };
        std::vector<EchelonRow> echelon;
        auto reduce = [&](QVector v) {
            for (const auto& e : echelon) {
                const Rational c = v[e.pivot];
                if (c.is_zero()) continue;
                for (std::size_t i = 0; i < dim; ++i) {
                    if (!e.v[i].is_zero()) v[i] -= c * e.v[i];
                }
            }
            return v;
        };
        auto insert = [&](QVector v) -> bool {
            std::size_t pivot = dim;
            for (std::size_t i = 0; i < dim; ++i) {
                if (!v[i].is_zero()) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == dim) return false;
            const Rational inv = Rational(1) / v[pivot];
            for (auto& x : v) x *= inv;
            // keep the echelon reduced
            for (auto& e : echelon) {
                const Rational c = e.v[pivot];
                if (c.is_zero()) continue;
                for (std::size_t i = 0; i < dim; ++i) {
                    if (!v[i].is_zero()) e.v[i] -= c * v[i];
                }
            }
            echelon.push_back(EchelonRow{pivot, std::move(v)});
            return true;
        };

        if (n > 0) {
            const CoboundaryMatrix image = coboundary_matrix(d, n - 1, parity ^ 1);
            for (int j = 0; j < image.matrix.cols(); ++j) {
                QVector col(dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    col[i] = image.matrix.at(static_cast<int>(i), j);
                }
                insert(reduce(std::move(col)));
            }
        }

        for (const QVector& k : cocycle.matrix.kernel_basis()) {
            QVector reduced = reduce(k);
            QVector rep = reduced;
            if (insert(std::move(reduced))) {
                // normalize the representative the same way insert() did
                for (std::size_t i = 0; i < dim; ++i) {
                    if (!rep[i].is_zero()) {
                        const Rational inv = Rational(1) / rep[i];
                        for (auto& x : rep) x *= inv;
                        break;
                    }
                }
                reps.push_back(element_of(rep, cocycle.domain, s));
            }
        }
    }
    return reps;
}

CoboundarySolver::CoboundarySolver(const Coderivation<Rational>& d, int n, int target_parity)
    : space_(d.space()),
      cob_(coboundary_matrix(d, n, target_parity ^ 1)),
      decomp_(cob_.matrix) {}

QVector CoboundarySolver::to_coords(const Coderivation<Rational>& target) const {
    const auto idx = index_of(cob_.codomain);
    return coords_of(target, idx, cob_.codomain.size(), "solve_coboundary");
}

Coderivation<Rational> CoboundarySolver::domain_element(const QVector& coords) const {
    return element_of(coords, cob_.domain, space_);
}

Coderivation<Rational> CoboundarySolver::codomain_element(const QVector& coords) const {
    return element_of(coords, cob_.codomain, space_);
}

CoboundarySolution CoboundarySolver::solve(const QVector& target_coords) const {
    const ImageDecomposition::Split split = decomp_.decompose(target_coords);
    return CoboundarySolution{domain_element(split.preimage), codomain_element(split.residue)};
}

CoboundarySolution CoboundarySolver::solve(const Coderivation<Rational>& target) const {
    return solve(to_coords(target));
}

CoboundarySolution solve_coboundary(const Coderivation<Rational>& d,
                                    const Coderivation<Rational>& target) {
    if (target.is_zero()) {
        return CoboundarySolution{Coderivation<Rational>(d.space()),
                                  Coderivation<Rational>(d.space())};
    }
    const auto arity = target.homogeneous_arity();
    const auto parity = target.homogeneous_parity();
    if (!arity || !parity) {
        throw std::invalid_argument("solve_coboundary: target must be homogeneous");
    }
    if (*arity < 1) {
        throw std::invalid_argument("solve_coboundary: target arity below the image of D");
    }
    const CoboundarySolver solver(d, *arity - 1, *parity);
    return solver.solve(target);
}

}  // namespace codiff
