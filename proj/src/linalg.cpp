#include "heckecentre/linalg.hpp"

#include <utility>

#include "heckecentre/error.hpp"

namespace hc {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(Errc::SizeMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::SizeMismatch, "matrix product dimensions");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    }
  return out;
}

namespace {

/// In-place row echelon form; returns (rank, sign of the row permutation).
std::pair<std::size_t, int> echelon(RatMatrix& m) {
  std::size_t rank = 0;
  int sign = 1;
  Rat factor;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      factor = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(rank, c) != 0) m(r, c) -= factor * m(rank, c);
      }
    }
    ++rank;
  }
  return {rank, sign};
}

}  // namespace

std::size_t rank(RatMatrix m) { return echelon(m).first; }

Rat determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw Error(Errc::SizeMismatch, "determinant of a non-square matrix");
  auto [r, sign] = echelon(m);
  if (r < m.rows()) return Rat(0);
  Rat det = sign;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

std::size_t span_rank(const std::vector<std::vector<Rat>>& vectors) {
  if (vectors.empty()) return 0;
  return rank(RatMatrix::from_rows(vectors));
}

LPoly bareiss_determinant(std::vector<std::vector<LPoly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(Errc::SizeMismatch, "determinant of a non-square matrix");
  if (n == 0) return LPoly(1);
  LPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return LPoly();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? num * (Rat(1) / prev.constant_term()) : lp_div_exact(num, prev);
      }
      m[i][k] = LPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

LPoly divfree_determinant(const std::vector<std::vector<LPoly>>& m,
                          const std::function<LPoly(const LPoly&, const LPoly&)>& mul) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(Errc::SizeMismatch, "determinant of a non-square matrix");
  if (n == 0) return LPoly(1);
  if (n > 20) throw Error(Errc::LimitExceeded, "division-free determinant is exponential in n");
  // partial[mask] = signed sum over injections of the first popcount(mask)
  // rows onto the columns in mask.
  std::vector<LPoly> partial(std::size_t{1} << n);
  std::vector<bool> present(partial.size(), false);
  partial[0] = LPoly(1);
  present[0] = true;
  for (std::size_t mask = 0; mask < partial.size(); ++mask) {
    if (!present[mask] || partial[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c) || m[row][c].is_zero()) continue;
      const int larger = __builtin_popcountll(mask >> (c + 1));
      LPoly term = mul(partial[mask], m[row][c]);
      const std::size_t next = mask | (std::size_t{1} << c);
      if (larger % 2) partial[next] -= term; else partial[next] += term;
      present[next] = true;
    }
    if (row + 1 < n) partial[mask] = LPoly();
  }
  return partial.back();
}

}  // namespace hc
