#include "nilnf/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace nilnf {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool ExactMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && sgn((*this)(i, j)) != 0) return false;
    return true;
}

Rational ExactMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in +");
    ExactMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in -");
    ExactMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
    ExactMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
    ExactMatrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

namespace {

// Reduces `m` (with optional augmented column `rhs`) to row echelon form in
// place; returns the pivot columns.
std::vector<std::size_t> echelon(ExactMatrix& m, std::vector<Rational>* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
            if (rhs) std::swap((*rhs)[piv], (*rhs)[row]);
        }
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (sgn(m(row, j)) != 0) m(row, j) *= inv;
        if (rhs) (*rhs)[row] *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = col + 1; j < m.cols(); ++j)
            if (sgn(m(row, j)) != 0) nz.push_back(j);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            const Rational factor = m(r, col);
            m(r, col) = 0;
            for (std::size_t j : nz) m(r, j) -= factor * m(row, j);
            if (rhs) (*rhs)[r] -= factor * (*rhs)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(ExactMatrix m) { return echelon(m, nullptr).size(); }

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto piv = echelon(aug, nullptr);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    ExactMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<std::vector<Rational>> solve(ExactMatrix a, std::vector<Rational> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
    const auto piv = echelon(a, &b);
    for (std::size_t r = piv.size(); r < a.rows(); ++r)
        if (sgn(b[r]) != 0) return std::nullopt;
    std::vector<Rational> x(a.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = b[r];
    return x;
}

}  // namespace nilnf
