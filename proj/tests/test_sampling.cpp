#include <gtest/gtest.h>

#include <set>

#include "heckecentre/rng.hpp"
#include "heckecentre/sampling.hpp"

using namespace hc;

// Reference outputs of the splitmix64 generator for seed 0.
TEST(SplitMix64, ReferenceSequence) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, UniformRange) {
  SplitMix64 rng(42);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = rng.uniform(1, 6);
    ASSERT_GE(x, 1);
    ASSERT_LE(x, 6);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_THROW(rng.uniform(3, 2), Error);
}

TEST(SplitMix64, Reproducible) {
  SplitMix64 a(7), b(7);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.uniform(-50, 50), b.uniform(-50, 50));
}

TEST(Sampling, DistinctAcrossBlocks) {
  SplitMix64 rng(1);
  const BlockShape shape({2, 3});
  for (int i = 0; i < 200; ++i) {
    const FiberPoint p = sample_distinct_point(shape, rng);
    ASSERT_EQ(p.shape(), shape);
    std::set<Rat> all;
    for (const auto& b : p.roots)
      for (const auto& r : b) {
        ASSERT_GE(r, 1);
        ASSERT_LE(r, 50);
        all.insert(r);
      }
    ASSERT_EQ(all.size(), 5u);
  }
}

TEST(Sampling, InSPoints) {
  SplitMix64 rng(2);
  const QParam q = QParam::make(2, 3);
  for (int i = 0; i < 200; ++i) {
    const FiberPoint p = sample_in_s_point(BlockShape({3}), q, LinkageMode::WithinBlock, rng);
    ASSERT_TRUE(in_dense_set(p, q).in_s());
  }
}

TEST(Sampling, RepeatedPoints) {
  SplitMix64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const FiberPoint p = sample_repeated_point(BlockShape({2, 3}), rng);
    ASSERT_FALSE(is_regular(centre_point_of(p)));
  }
}

TEST(Sampling, ImpossibleRequest) {
  SplitMix64 rng(4);
  EXPECT_THROW(sample_distinct_point(BlockShape({3}), rng, {1, 2}), Error);
}
