#include "heckecentre/partitions.hpp"

#include <algorithm>
#include <functional>

#include "heckecentre/error.hpp"

namespace hc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(Errc::InvalidInput, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(Errc::InvalidInput, "partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }
Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error(Errc::InvalidInput, "negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  for (int j = 0; j < (p.length() ? p[0] : 0); ++j) {
    int count = 0;
    for (int part : p.parts())
      if (part > j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::uint64_t f_lambda(const Partition& p) {
  const int n = p.size();
  if (n > 20) throw Error(Errc::LimitExceeded, "hook-length formula limited to n <= 20");
  const Partition c = conjugate(p);
  std::uint64_t num = 1;
  for (int k = 2; k <= n; ++k) num *= static_cast<std::uint64_t>(k);
  std::uint64_t hooks = 1;
  for (int r = 0; r < p.length(); ++r)
    for (int col = 0; col < p[r]; ++col)
      hooks *= static_cast<std::uint64_t>(p[r] - col + c[col] - r - 1);
  return num / hooks;
}

bool dominance_le(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw Error(Errc::SizeMismatch, "dominance needs partitions of the same size");
  int sa = 0, sb = 0;
  const std::size_t len = static_cast<std::size_t>(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

bool Tableau::is_standard() const {
  if (static_cast<int>(rows.size()) != shape.length()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(size()) + 1, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape[r]) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v < 1 || v > size() || seen[v]) return false;
      seen[v] = true;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

int Tableau::content_of(int k) const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] == k) return static_cast<int>(c) - static_cast<int>(r);
  throw Error(Errc::OutOfRange, "entry " + std::to_string(k) + " not in tableau");
}

std::string Tableau::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ",";
      out += std::to_string(rows[r][c]);
    }
    out += "]";
  }
  return out + "]";
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
  std::vector<Tableau> out;
  Tableau cur{p, std::vector<std::vector<int>>(static_cast<std::size_t>(p.length()))};
  const int n = p.size();
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < cur.rows.size(); ++r) {
      const std::size_t c = cur.rows[r].size();
      if (static_cast<int>(c) >= p[r]) continue;
      if (r > 0 && cur.rows[r - 1].size() <= c) continue;
      cur.rows[r].push_back(k);
      rec(k + 1);
      cur.rows[r].pop_back();
    }
  };
  rec(1);
  return out;
}

BlockShape PartitionFn::shape() const {
  std::vector<int> sizes;
  for (const auto& b : blocks) sizes.push_back(b.size());
  return BlockShape(std::move(sizes));
}

std::string PartitionFn::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += blocks[i].to_string();
  }
  return out + ")";
}

bool dominance_le(const PartitionFn& a, const PartitionFn& b) {
  if (a.blocks.size() != b.blocks.size()) throw Error(Errc::SizeMismatch, "partition functions over different shapes");
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    if (!dominance_le(a.blocks[i], b.blocks[i])) return false;
  return true;
}

std::vector<PartitionFn> partition_functions(const BlockShape& shape) {
  std::vector<std::vector<Partition>> per_block;
  for (int e : shape.sizes()) per_block.push_back(partitions_of(e));
  std::vector<PartitionFn> out;
  PartitionFn cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == per_block.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& p : per_block[i]) {
      cur.blocks.push_back(p);
      rec(i + 1);
      cur.blocks.pop_back();
    }
  };
  rec(0);
  return out;
}

std::pair<PartitionFn, PartitionFn> extremes(const BlockShape& shape) {
  PartitionFn hi, lo;
  for (int e : shape.sizes()) {
    hi.blocks.push_back(Partition::row(e));
    lo.blocks.push_back(Partition::column(e));
  }
  return {hi, lo};
}

std::uint64_t mult_of(const PartitionFn& p) {
  std::uint64_t m = 1;
  for (const auto& b : p.blocks) m *= f_lambda(b);
  return m;
}

IdentityCheck identity_check(const BlockShape& shape, std::uint64_t max_group) {
  IdentityCheck r;
  r.w_size = shape.group_order();
  if (r.w_size > max_group)
    throw Error(Errc::LimitExceeded, "group order " + std::to_string(r.w_size) + " exceeds " + std::to_string(max_group));
  for (const auto& p : partition_functions(shape)) {
    const std::uint64_t m = mult_of(p);
    r.sum_m_sq += m * m;
  }
  r.ok = r.sum_m_sq == r.w_size;
  return r;
}

std::uint64_t count_mult_one(const BlockShape& shape) {
  std::uint64_t count = 0;
  for (const auto& p : partition_functions(shape))
    if (mult_of(p) == 1) ++count;
  return count;
}

RskPair rsk(const Perm& w) {
  std::vector<std::vector<int>> p_rows, q_rows;
  for (int i = 0; i < w.size(); ++i) {
    int x = w(i) + 1;
    std::size_t r = 0;
    while (true) {
      if (r == p_rows.size()) {
        p_rows.push_back({x});
        q_rows.push_back({i + 1});
        break;
      }
      auto& row = p_rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q_rows[r].push_back(i + 1);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  std::vector<int> parts;
  for (const auto& row : p_rows) parts.push_back(static_cast<int>(row.size()));
  Partition shape(parts);
  return {Tableau{shape, std::move(p_rows)}, Tableau{shape, std::move(q_rows)}};
}

Perm inverse_rsk(const Tableau& p, const Tableau& q) {
  if (!(p.shape == q.shape) || !p.is_standard() || !q.is_standard())
    throw Error(Errc::InvalidInput, "inverse RSK needs two standard tableaux of one shape");
  auto pr = p.rows;
  auto qr = q.rows;
  const int n = p.size();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    std::size_t r = 0;
    while (qr[r].empty() || qr[r].back() != k) ++r;
    qr[r].pop_back();
    int x = pr[r].back();
    pr[r].pop_back();
    for (std::size_t up = r; up-- > 0;) {
      auto& row = pr[up];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(x, *it);
    }
    images[static_cast<std::size_t>(k - 1)] = x - 1;
    while (!pr.empty() && pr.back().empty()) {
      pr.pop_back();
      qr.pop_back();
    }
  }
  return Perm(std::move(images));
}

}  // namespace hc
