#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "heckecentre/lpoly.hpp"
#include "heckecentre/rational.hpp"

namespace hc {

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::span<const Rat> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  RatMatrix transpose() const;
  /// Kronecker product a ⊗ b.
  friend RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

std::size_t rank(RatMatrix m);
Rat determinant(RatMatrix m);

/// Rank of a list of vectors (all the same length).
std::size_t span_rank(const std::vector<std::vector<Rat>>& vectors);

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
/// Every intermediate division is exact polynomial division.
LPoly bareiss_determinant(std::vector<std::vector<LPoly>> m);

/// Division-free determinant (Laplace expansion over column subsets,
/// O(n 2^n) products) in a commutative ring whose product is `mul`.
/// Meant for small matrices over quotient rings where exact division is
/// unavailable.
LPoly divfree_determinant(const std::vector<std::vector<LPoly>>& m,
                          const std::function<LPoly(const LPoly&, const LPoly&)>& mul);

}  // namespace hc
