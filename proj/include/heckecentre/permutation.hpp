#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hc {

/// Permutation of {0..n-1} stored as its image list; w(i) = images[i].
/// Printed and serialized 1-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  /// Adjacent transposition s_i swapping i and i+1 (0-based i).
  static Perm simple(int n, int i);

  int size() const noexcept { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i]; }
  const std::vector<int>& images() const noexcept { return w_; }

  /// (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  /// Number of inversions.
  int length() const;
  bool is_identity() const;
  /// Reduced word i_1 ... i_l with w = s_{i_1} ... s_{i_l}.
  std::vector<int> reduced_word() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

  /// One-line notation, 1-based: "[2,1,3]".
  std::string to_string() const;

 private:
  std::vector<int> w_;
};

/// All permutations of size n in lexicographic order of the image list.
std::vector<Perm> all_perms(int n);

std::size_t factorial(int n);

/// Index of w in all_perms(w.size()) (Lehmer code).
std::size_t perm_rank(const Perm& w);

}  // namespace hc
