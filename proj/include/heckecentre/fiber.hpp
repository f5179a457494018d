#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heckecentre/lpoly.hpp"
#include "heckecentre/rational.hpp"
#include "heckecentre/symmetric.hpp"
#include "heckecentre/upoly.hpp"

namespace hc {

/// Maximal ideal of the centre: values a_{k,i} of the s-coordinates,
/// a[i-1][k-1] = a_{k,i}. The top value of each block is nonzero.
struct CentrePoint {
  std::vector<std::vector<Rat>> a;

  BlockShape shape() const;
  /// s_{k,i} -> a_{k,i}.
  Assignment assignment() const;
  friend bool operator==(const CentrePoint&, const CentrePoint&) = default;
};

/// Maximal ideal above a centre point: root tuples, roots[i-1][k-1] =
/// alpha_{k,i}, all nonzero.
struct FiberPoint {
  std::vector<std::vector<Rat>> roots;

  BlockShape shape() const;
  /// X_{k,i} -> alpha_{k,i}.
  Assignment assignment() const;
  friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
};

/// Throws ZeroRoot / InvalidInput.
void validate(const FiberPoint& fp);
void validate(const CentrePoint& m);

/// Hecke parameter q: not 0 or +-1, and [k]_q != 0 for 2 <= k <= max_e.
struct QParam {
  Rat q;

  /// Throws DegenerateParameter.
  static QParam make(const Rat& q, int max_e = 1);
};

/// [k]_q = 1 + q + ... + q^{k-1}
Rat q_integer(int k, const Rat& q);

enum class LinkageMode { WithinBlock, AllPairs };

struct DenseSetVerdict {
  enum class Kind { InS, NotRegular, Linked };
  Kind kind = Kind::InS;
  /// NotRegular: block index and the two slots carrying equal roots.
  /// Linked: the two (slot, block) positions with ratio q^{+-1}.
  std::pair<int, int> first{0, 0};
  std::pair<int, int> second{0, 0};
  Rat ratio = 0;

  bool in_s() const noexcept { return kind == Kind::InS; }
  std::string kind_name() const;
};

/// X^e + sum_k (-1)^k a_k X^{e-k}. Throws ZeroConstantTerm when a_e = 0.
RatUPoly char_poly(const std::vector<Rat>& a);

/// Block-wise Vieta. Throws ZeroRoot.
CentrePoint centre_point_of(const FiberPoint& fp);

/// Every block's characteristic polynomial is squarefree.
bool is_regular(const CentrePoint& m);

DenseSetVerdict in_dense_set(const FiberPoint& fp, const QParam& q, LinkageMode mode = LinkageMode::WithinBlock);

/// Assignments X_{k,i} -> alpha_{w_i(k),i} over all w in the group, in
/// group_elements() order.
std::vector<FiberPoint> fiber_orbit(const FiberPoint& fp);

struct SplitVerdict {
  std::size_t dim = 0;
  bool split = false;
  Rat det = 0;
};

/// Evaluation matrix of the tensored Artin basis at the orbit points.
SplitVerdict split_check(const FiberPoint& fp);

/// Root extraction by rational-root search; throws IrrationalRoots when a
/// block's polynomial does not split over Q.
FiberPoint lift_to_fiber(const CentrePoint& m);

}  // namespace hc
