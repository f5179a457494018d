#pragma once

#include <cstdint>

#include "heckecentre/fiber.hpp"
#include "heckecentre/rng.hpp"
#include "heckecentre/symmetric.hpp"

namespace hc {

struct RootRange {
  std::int64_t lo = 1;
  std::int64_t hi = 50;
};

/// Pairwise distinct integer roots (across all blocks), drawn in block
/// order, slot by slot.
FiberPoint sample_distinct_point(const BlockShape& shape, SplitMix64& rng, RootRange range = {});

/// Distinct roots redrawn until in_dense_set(., q, mode) is InS.
FiberPoint sample_in_s_point(const BlockShape& shape, const QParam& q, LinkageMode mode, SplitMix64& rng,
                             RootRange range = {});

/// A distinct point with one slot of some block of size >= 2 overwritten by
/// another root of that block. Throws InvalidInput if every block has size 1.
FiberPoint sample_repeated_point(const BlockShape& shape, SplitMix64& rng, RootRange range = {});

}  // namespace hc
