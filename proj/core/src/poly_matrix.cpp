#include "ogfiber/poly_matrix.hpp"

#include <stdexcept>

namespace ogfiber {

PolyMatrix PolyMatrix::identity(std::size_t n, RegistryPtr reg) {
    PolyMatrix m(n, n, reg);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Polynomial::constant(reg, Rational(1));
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix out(rows_, o.cols_, reg_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Polynomial s = Polynomial::zero(reg_);
            for (std::size_t k = 0; k < cols_; ++k) {
                const auto& a = at(i, k);
                const auto& b = o.at(k, j);
                if (!a.is_zero() && !b.is_zero()) s = s + a * b;
            }
            out.at(i, j) = std::move(s);
        }
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    PolyMatrix out(rows_, cols_, reg_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + o.entries_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    PolyMatrix out(rows_, cols_, reg_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - o.entries_[i];
    return out;
}

PolyMatrix PolyMatrix::scaled(const Rational& c) const {
    PolyMatrix out(rows_, cols_, reg_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].scaled(c);
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_, reg_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

PolyMatrix PolyMatrix::pow(int e) const {
    if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
    PolyMatrix r = identity(rows_, reg_);
    PolyMatrix b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : entries_)
        if (!p.is_zero()) return false;
    return true;
}

Polynomial PolyMatrix::trace() const {
    Polynomial s = Polynomial::zero(reg_);
    for (std::size_t i = 0; i < rows_; ++i) s = s + at(i, i);
    return s;
}

Polynomial PolyMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    if (rows_ == 0) return Polynomial::constant(reg_, Rational(1));
    if (rows_ == 1) return at(0, 0);
    Polynomial s = Polynomial::zero(reg_);
    // expand along the first row
    for (std::size_t j = 0; j < cols_; ++j) {
        if (at(0, j).is_zero()) continue;
        PolyMatrix sub(rows_ - 1, cols_ - 1, reg_);
        for (std::size_t r = 1; r < rows_; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = at(r, c);
            }
        }
        Polynomial term = at(0, j) * sub.det();
        s = (j % 2 == 0) ? s + term : s - term;
    }
    return s;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    if (k == 0) return {{}};
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) break;
            if (i == 0) return out;
        }
        if (idx[i] == i + n - k) return out;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Polynomial> PolyMatrix::minors(std::size_t k) const {
    if (k == 0 || k > rows_ || k > cols_)
        throw std::invalid_argument("minor size out of range");
    std::vector<Polynomial> out;
    for (const auto& rs : subsets(rows_, k)) {
        for (const auto& cs : subsets(cols_, k)) {
            PolyMatrix sub(k, k, reg_);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = at(rs[i], cs[j]);
            out.push_back(sub.det());
        }
    }
    return out;
}

} // namespace ogfiber
