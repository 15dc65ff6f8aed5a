#ifndef OGFIBER_POLY_MATRIX_HPP
#define OGFIBER_POLY_MATRIX_HPP

#include "ogfiber/polynomial.hpp"

#include <vector>

namespace ogfiber {

// Rectangular matrix of polynomials over one shared registry.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, RegistryPtr reg)
        : rows_(rows), cols_(cols), reg_(std::move(reg)),
          entries_(rows * cols, Polynomial::zero(reg_)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RegistryPtr& registry() const { return reg_; }

    Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    static PolyMatrix identity(std::size_t n, RegistryPtr reg);

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix scaled(const Rational& c) const;
    PolyMatrix transpose() const;
    PolyMatrix pow(int e) const;

    bool is_zero() const;

    Polynomial trace() const;
    Polynomial det() const; // cofactor expansion, square only

    // All k x k minors, row-major lexicographic over (row set, column set).
    std::vector<Polynomial> minors(std::size_t k) const;

private:
    std::size_t rows_, cols_;
    RegistryPtr reg_;
    std::vector<Polynomial> entries_;
};

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

} // namespace ogfiber

#endif
