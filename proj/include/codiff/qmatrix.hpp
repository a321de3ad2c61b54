#ifndef CODIFF_QMATRIX_HPP
#define CODIFF_QMATRIX_HPP

#include <vector>

#include "codiff/scalars.hpp"

namespace codiff {

using QVector = std::vector<Rational>;

// Dense matrix over the rationals. Everything here is exact; sizes stay
// small (a few hundred rows) so dense Gaussian elimination is enough.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    QMatrix operator*(const QMatrix& rhs) const;
    QVector apply(const QVector& v) const;
    bool is_zero() const;
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref();

    int rank() const;

    // Basis of the right kernel, one vector per free column, in reduced
    // (pivot-normalized) form. Deterministic.
    std::vector<QVector> kernel_basis() const;

    // Inverse via Gauss-Jordan; throws on a singular matrix.
    QMatrix inverse() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

// Decomposition of the target space of A into im(A) plus the canonical
// complement spanned by the standard basis vectors that the greedy
// left-to-right column scan of [A | I] selects.
class ImageDecomposition {
public:
    explicit ImageDecomposition(const QMatrix& a);

    int rank() const { return static_cast<int>(image_cols_.size()); }
    const std::vector<int>& image_cols() const { return image_cols_; }
    const std::vector<int>& complement_rows() const { return complement_rows_; }

    struct Split {
        QVector preimage;  // x with A x + residue = t, supported on image_cols
        QVector residue;   // supported on complement_rows
    };
    Split decompose(const QVector& target) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> image_cols_;
    std::vector<int> complement_rows_;
    QMatrix basis_inverse_;  // inverse of [A restricted to image_cols | E_complement]
};

}  // namespace codiff

#endif
