#ifndef OGFIBER_QLINALG_HPP
#define OGFIBER_QLINALG_HPP

#include "ogfiber/rational.hpp"

#include <optional>
#include <vector>

namespace ogfiber {

// Dense exact rational matrix; just enough linear algebra for rank, kernels
// and inverses. Deterministic left-to-right pivoting throughout.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    static QMatrix identity(std::size_t n);

    QMatrix operator*(const QMatrix& o) const;

    std::size_t rank() const;

    // Reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();

    // Basis of the right kernel, one column vector per basis element,
    // in the deterministic order of free columns.
    std::vector<std::vector<Rational>> nullspace() const;

    std::optional<QMatrix> inverse() const;

    Rational det() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

} // namespace ogfiber

#endif
