#pragma once

// Dense exact-rational linear algebra. Elimination skips zero entries, which
// keeps the structured (mostly zero) systems arising here cheap.

#include <cstddef>
#include <optional>
#include <vector>

#include "nilnf/rational.hpp"

namespace nilnf {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_diagonal() const;
    Rational trace() const;
    ExactMatrix transpose() const;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const Rational& s, const ExactMatrix& a);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Rank by Gaussian elimination over Q.
std::size_t rank(ExactMatrix m);

/// Inverse of a square nonsingular matrix, or nullopt.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// One solution of A x = b (free variables set to zero), or nullopt if the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve(ExactMatrix a, std::vector<Rational> b);

}  // namespace nilnf
