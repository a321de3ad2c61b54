#include "codiff/qmatrix.hpp"

#include <stdexcept>

namespace codiff {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    QMatrix r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                if (!rhs.at(k, j).is_zero()) r.at(i, j) += v * rhs.at(k, j);
            }
        }
    }
    return r;
}

QVector QMatrix::apply(const QVector& v) const {
    if (static_cast<int>(v.size()) != cols_) {
        throw std::invalid_argument("matrix apply: size mismatch");
    }
    QVector r(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        }
    }
    return r;
}

bool QMatrix::is_zero() const {
    for (const auto& v : a_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

std::vector<int> QMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r) {
            if (!at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(row, c));
        }
        const Rational inv = Rational(1) / at(row, col);
        for (int c = col; c < cols_; ++c) at(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            const Rational factor = at(r, col);
            for (int c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMatrix::rank() const {
    QMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

std::vector<QVector> QMatrix::kernel_basis() const {
    QMatrix r = *this;
    const std::vector<int> pivots = r.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<QVector> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        QVector v(static_cast<std::size_t>(cols_));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[static_cast<std::size_t>(pivots[i])] = -r.at(static_cast<int>(i), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
    QMatrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    const std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) {
        throw std::invalid_argument("inverse: singular matrix");
    }
    QMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    }
    return inv;
}

ImageDecomposition::ImageDecomposition(const QMatrix& a) : rows_(a.rows()), cols_(a.cols()) {
    // Greedy scan of the columns of [A | I], keeping a reduced echelon
    // basis of the span so far. Identity columns that survive form the
    // canonical complement of im(A).
    struct EchelonRow {
        int pivot;
        QVector v;
    };
    std::vector<EchelonRow> echelon;

    auto try_insert = [&](QVector v) -> bool {
        for (const auto& e : echelon) {
            const Rational& c = v[static_cast<std::size_t>(e.pivot)];
            if (c.is_zero()) continue;
            const Rational factor = c;
            for (int i = 0; i < rows_; ++i) {
                if (!e.v[static_cast<std::size_t>(i)].is_zero()) {
                    v[static_cast<std::size_t>(i)] -=
                        factor * e.v[static_cast<std::size_t>(i)];
                }
            }
        }
        int pivot = -1;
        for (int i = 0; i < rows_; ++i) {
            if (!v[static_cast<std::size_t>(i)].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return false;
        const Rational inv = Rational(1) / v[static_cast<std::size_t>(pivot)];
        for (auto& x : v) x *= inv;
        echelon.push_back(EchelonRow{pivot, std::move(v)});
        return true;
    };

    for (int j = 0; j < cols_; ++j) {
        QVector col(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) col[static_cast<std::size_t>(i)] = a.at(i, j);
        if (try_insert(std::move(col))) image_cols_.push_back(j);
    }
    for (int i = 0; i < rows_; ++i) {
        QVector e(static_cast<std::size_t>(rows_));
        e[static_cast<std::size_t>(i)] = 1;
        if (try_insert(std::move(e))) complement_rows_.push_back(i);
    }

    QMatrix b(rows_, rows_);
    int col = 0;
    for (int j : image_cols_) {
        for (int i = 0; i < rows_; ++i) b.at(i, col) = a.at(i, j);
        ++col;
    }
    for (int i : complement_rows_) {
        b.at(i, col) = 1;
        ++col;
    }
    basis_inverse_ = b.inverse();
}

ImageDecomposition::Split ImageDecomposition::decompose(const QVector& target) const {
    if (static_cast<int>(target.size()) != rows_) {
        throw std::invalid_argument("decompose: size mismatch");
    }
    const QVector z = basis_inverse_.apply(target);
    Split out;
    out.preimage.assign(static_cast<std::size_t>(cols_), Rational(0));
    out.residue.assign(static_cast<std::size_t>(rows_), Rational(0));
    const std::size_t r = image_cols_.size();
    for (std::size_t i = 0; i < r; ++i) {
        out.preimage[static_cast<std::size_t>(image_cols_[i])] = z[i];
    }
    for (std::size_t i = 0; i < complement_rows_.size(); ++i) {
        out.residue[static_cast<std::size_t>(complement_rows_[i])] = z[r + i];
    }
    return out;
}

}  // namespace codiff
