#include <gtest/gtest.h>

#include <set>

#include "heckecentre/error.hpp"
#include "heckecentre/fiber.hpp"
#include "heckecentre/sampling.hpp"

using namespace hc;

namespace {

FiberPoint fp(std::vector<std::vector<long>> roots) {
  FiberPoint out;
  for (const auto& b : roots) {
    std::vector<Rat> r;
    for (long x : b) r.push_back(Rat(x));
    out.roots.push_back(std::move(r));
  }
  return out;
}

CentrePoint cp(std::vector<std::vector<long>> a) {
  CentrePoint out;
  for (const auto& b : a) {
    std::vector<Rat> r;
    for (long x : b) r.push_back(Rat(x));
    out.a.push_back(std::move(r));
  }
  return out;
}

RatUPoly rp(std::vector<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.push_back(Rat(x));
  return RatUPoly(std::move(v));
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidInput;
}

const QParam kQ2 = QParam::make(2, 4);

}  // namespace

TEST(QParam, Degenerate) {
  for (long q : {0L, 1L, -1L}) EXPECT_EQ(code_of([q] { QParam::make(Rat(q)); }), Errc::DegenerateParameter);
  // [2]_q = 1 + q vanishes at q = -1 only, [3]_q has no rational roots.
  EXPECT_NO_THROW(QParam::make(Rat(-2), 4));
  EXPECT_EQ(q_integer(3, 2), Rat(7));
  EXPECT_EQ(q_integer(1, 5), Rat(1));
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly({Rat(5), Rat(6)}), rp({6, -5, 1}));
  EXPECT_EQ(char_poly({Rat(2), Rat(1)}), rp({1, -2, 1}));
  EXPECT_EQ(char_poly({Rat(7)}), rp({-7, 1}));
  EXPECT_EQ(code_of([] { char_poly({Rat(1), Rat(0)}); }), Errc::ZeroConstantTerm);
  EXPECT_EQ(code_of([] { char_poly({}); }), Errc::InvalidInput);
}

TEST(CentrePoint, Vieta) {
  EXPECT_EQ(centre_point_of(fp({{2, 3}})), cp({{5, 6}}));
  EXPECT_EQ(centre_point_of(fp({{1, 1}})), cp({{2, 1}}));
  EXPECT_EQ(centre_point_of(fp({{2, 3}, {5}})), cp({{5, 6}, {5}}));
  EXPECT_EQ(code_of([] { centre_point_of(fp({{0, 3}})); }), Errc::ZeroRoot);
}

TEST(CentrePoint, CharPolyHasTheRoots) {
  const FiberPoint p = fp({{2, -3, 5}});
  const RatUPoly f = char_poly(centre_point_of(p).a[0]);
  for (const auto& r : p.roots[0]) EXPECT_EQ(f.eval(r), Rat(0));
  EXPECT_EQ(lift_to_fiber(centre_point_of(p)).roots[0].size(), 3u);
}

TEST(Regularity, Examples) {
  EXPECT_TRUE(is_regular(cp({{5, 6}})));
  EXPECT_FALSE(is_regular(cp({{2, 1}})));
  EXPECT_TRUE(is_regular(cp({{9}})));
}

TEST(DenseSet, Examples) {
  const auto linked = in_dense_set(fp({{1, 2}}), kQ2);
  EXPECT_EQ(linked.kind, DenseSetVerdict::Kind::Linked);
  EXPECT_EQ(linked.ratio, Rat(2));
  EXPECT_TRUE(in_dense_set(fp({{1, 3}}), kQ2).in_s());
  EXPECT_EQ(in_dense_set(fp({{1, 1}}), kQ2).kind, DenseSetVerdict::Kind::NotRegular);
}

TEST(DenseSet, CrossBlockOnlyInAllPairsMode) {
  const FiberPoint p = fp({{1, 3}, {2, 7}});
  EXPECT_TRUE(in_dense_set(p, kQ2, LinkageMode::WithinBlock).in_s());
  const auto all = in_dense_set(p, kQ2, LinkageMode::AllPairs);
  EXPECT_EQ(all.kind, DenseSetVerdict::Kind::Linked);
  EXPECT_NE(all.first.second, all.second.second);
}

TEST(DenseSet, AllPairsStrongerRandomized) {
  SplitMix64 rng(0xd5);
  const BlockShape shape({2, 2});
  int strict_only = 0;
  for (int i = 0; i < 200; ++i) {
    const FiberPoint p = sample_distinct_point(shape, rng, {1, 8});
    const bool all = in_dense_set(p, kQ2, LinkageMode::AllPairs).in_s();
    const bool within = in_dense_set(p, kQ2, LinkageMode::WithinBlock).in_s();
    if (all) {
      ASSERT_TRUE(within);
    }
    if (within && !all) ++strict_only;
  }
  EXPECT_GT(strict_only, 0);
}

TEST(Orbit, Examples) {
  const auto o = fiber_orbit(fp({{2, 3}}));
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0], fp({{2, 3}}));
  EXPECT_EQ(o[1], fp({{3, 2}}));
  EXPECT_EQ(fiber_orbit(fp({{2, 3, 5}})).size(), 6u);
  EXPECT_EQ(fiber_orbit(fp({{2, 3}, {5, 7}})).size(), 4u);
  EXPECT_EQ(fiber_orbit(fp({{1, 1}})).size(), 2u);
}

TEST(Split, Examples) {
  const auto s = split_check(fp({{2, 3}}));
  EXPECT_EQ(s.dim, 2u);
  EXPECT_TRUE(s.split);
  EXPECT_EQ(s.det, Rat(-1));
  const auto r = split_check(fp({{1, 1}}));
  EXPECT_FALSE(r.split);
  EXPECT_EQ(r.det, Rat(0));
  const auto t = split_check(fp({{2, 3}, {5, 7}}));
  EXPECT_EQ(t.dim, 4u);
  EXPECT_TRUE(t.split);
}

TEST(Fiber, PropertiesRandomized) {
  SplitMix64 rng(0xf1be);
  for (const auto& shape : {BlockShape({2}), BlockShape({3}), BlockShape({2, 2}), BlockShape({2, 3})}) {
    for (int i = 0; i < 50; ++i) {
      // Small range so repeated roots occur often.
      FiberPoint p;
      for (int e : shape.sizes()) {
        std::vector<Rat> block;
        for (int k = 0; k < e; ++k) block.push_back(Rat(rng.uniform(1, 4)));
        p.roots.push_back(std::move(block));
      }
      const CentrePoint m = centre_point_of(p);
      bool distinct = true;
      for (const auto& b : p.roots) distinct = distinct && std::set<Rat>(b.begin(), b.end()).size() == b.size();
      ASSERT_EQ(is_regular(m), distinct);
      const auto orbit = fiber_orbit(p);
      for (const auto& o : orbit) ASSERT_EQ(centre_point_of(o), m);
      const auto s = split_check(p);
      ASSERT_EQ(s.dim, shape.group_order());
      ASSERT_EQ(s.split, is_regular(m));
      if (in_dense_set(p, kQ2).in_s()) {
        std::set<std::vector<std::vector<Rat>>> points;
        for (const auto& o : orbit) points.insert(o.roots);
        ASSERT_EQ(points.size(), shape.group_order());
      }
    }
  }
}

TEST(Lift, Irrational) {
  EXPECT_EQ(code_of([] { lift_to_fiber(cp({{0, -2}})); }), Errc::IrrationalRoots);
}

TEST(Validate, Points) {
  EXPECT_EQ(code_of([] { validate(fp({{1, 0}})); }), Errc::ZeroRoot);
  EXPECT_EQ(code_of([] { validate(cp({{1, 0}})); }), Errc::ZeroConstantTerm);
}
