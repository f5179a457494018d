#include "heckecentre/sampling.hpp"

#include <set>

#include "heckecentre/error.hpp"

namespace hc {

FiberPoint sample_distinct_point(const BlockShape& shape, SplitMix64& rng, RootRange range) {
  const auto total = static_cast<std::int64_t>(shape.total_variables());
  if (range.lo < 1 || range.hi - range.lo + 1 < total) throw Error(Errc::InvalidInput, "root range too small for distinct roots");
  std::set<std::int64_t> used;
  FiberPoint fp;
  for (int e : shape.sizes()) {
    std::vector<Rat> block;
    while (static_cast<int>(block.size()) < e) {
      const std::int64_t r = rng.uniform(range.lo, range.hi);
      if (used.insert(r).second) block.emplace_back(static_cast<long>(r));
    }
    fp.roots.push_back(std::move(block));
  }
  return fp;
}

FiberPoint sample_in_s_point(const BlockShape& shape, const QParam& q, LinkageMode mode, SplitMix64& rng,
                             RootRange range) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    FiberPoint fp = sample_distinct_point(shape, rng, range);
    if (in_dense_set(fp, q, mode).in_s()) return fp;
  }
  throw Error(Errc::LimitExceeded, "no dense-set point found in the root range");
}

FiberPoint sample_repeated_point(const BlockShape& shape, SplitMix64& rng, RootRange range) {
  std::vector<int> candidates;
  for (int i = 1; i <= shape.blocks(); ++i)
    if (shape.size(i) >= 2) candidates.push_back(i);
  if (candidates.empty()) throw Error(Errc::InvalidInput, "repeated roots need a block of size >= 2");
  FiberPoint fp = sample_distinct_point(shape, rng, range);
  const int block = candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(candidates.size()) - 1))];
  auto& roots = fp.roots[static_cast<std::size_t>(block - 1)];
  const auto n = static_cast<std::int64_t>(roots.size());
  const auto src = rng.uniform(0, n - 1);
  auto dst = rng.uniform(0, n - 2);
  if (dst >= src) ++dst;
  roots[static_cast<std::size_t>(dst)] = roots[static_cast<std::size_t>(src)];
  return fp;
}

}  // namespace hc
