#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "heckecentre/permutation.hpp"
#include "heckecentre/symmetric.hpp"

namespace hc {

/// Weakly decreasing positive parts. The empty partition has size 0.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput unless weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  static Partition row(int n);
  static Partition column(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  /// "(2,1)"
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Partitions of n, lexicographically decreasing: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

Partition conjugate(const Partition& p);

/// Hook-length formula. Throws LimitExceeded above n = 20.
std::uint64_t f_lambda(const Partition& p);

/// Partial sums of a never exceed those of b. Throws SizeMismatch.
bool dominance_le(const Partition& a, const Partition& b);

/// Row-wise filling of a partition shape.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  int size() const noexcept { return shape.size(); }
  /// Entries 1..n each once, rows and columns strictly increasing.
  bool is_standard() const;
  /// col - row of the box holding entry k (0-based row and column).
  int content_of(int k) const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows <=> b.rows; }
  std::string to_string() const;
};

/// All standard tableaux of the shape. The first one is the row reading
/// tableau (1..λ_1 in the top row, and so on).
std::vector<Tableau> standard_tableaux(const Partition& p);

/// One partition per block, |P(i)| = e_i.
struct PartitionFn {
  std::vector<Partition> blocks;

  BlockShape shape() const;
  friend bool operator==(const PartitionFn&, const PartitionFn&) = default;
  friend auto operator<=>(const PartitionFn& a, const PartitionFn& b) { return a.blocks <=> b.blocks; }
  std::string to_string() const;
};

/// Product dominance order. Throws SizeMismatch on different shapes.
bool dominance_le(const PartitionFn& a, const PartitionFn& b);

/// Every partition function over the shape; block 1 varies slowest.
std::vector<PartitionFn> partition_functions(const BlockShape& shape);

/// (P_max, P_min): rows and columns in every block.
std::pair<PartitionFn, PartitionFn> extremes(const BlockShape& shape);

/// prod_i f^{P(i)}
std::uint64_t mult_of(const PartitionFn& p);

struct IdentityCheck {
  std::uint64_t sum_m_sq = 0;
  std::uint64_t w_size = 0;
  bool ok = false;
};

/// Sum of m_P^2 over all P against prod e_i!. Throws LimitExceeded when the
/// group order is above max_group.
IdentityCheck identity_check(const BlockShape& shape, std::uint64_t max_group = 5040);

/// Number of P with m_P = 1.
std::uint64_t count_mult_one(const BlockShape& shape);

struct RskPair {
  Tableau p;
  Tableau q;
};

/// Row insertion of the word w(1), ..., w(n) (values 1-based).
RskPair rsk(const Perm& w);
/// Inverse of rsk. Throws InvalidInput on non-standard or mismatched input.
Perm inverse_rsk(const Tableau& p, const Tableau& q);

}  // namespace hc
