#include <gtest/gtest.h>

#include "heckecentre/error.hpp"
#include "heckecentre/linalg.hpp"
#include "heckecentre/lpoly.hpp"
#include "heckecentre/rational.hpp"
#include "heckecentre/upoly.hpp"
#include "test_util.hpp"

using namespace hc;
using hc::test::P;
using hc::test::X;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidInput;
}

RatUPoly rp(std::vector<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.push_back(Rat(x));
  return RatUPoly(std::move(v));
}

// Brute-force discriminant of a polynomial of degree <= 4 from the
// Sylvester matrix of f and f'.
Rat sylvester_resultant(const RatUPoly& f, const RatUPoly& g) {
  const int m = f.degree(), n = g.degree();
  if (n < 0) return 0;
  const int size = m + n;
  RatMatrix s(size, size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = f.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = g.coeff(n - k);
  return determinant(s);
}

}  // namespace

TEST(Rational, CanonicalText) {
  EXPECT_EQ(rat_to_string(make_rat(6, 4)), "3/2");
  EXPECT_EQ(rat_to_string(Rat(0)), "0/1");
  EXPECT_EQ(rat_to_string(make_rat(-5)), "-5/1");
  EXPECT_EQ(parse_rat("-6/4"), make_rat(-3, 2));
  EXPECT_EQ(parse_rat("7"), Rat(7));
  EXPECT_EQ(code_of([] { parse_rat("1/0"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse_rat("abc"); }), Errc::ParseError);
}

TEST(LPoly, DifferenceOfSquares) {
  EXPECT_EQ(lp_mul(X(1) + X(2), X(1) - X(2)), X(1).pow(2) - X(2).pow(2));
}

TEST(LPoly, LaurentCancellation) {
  const LPoly inv = LPoly::var(VarId::x(1), -1) + LPoly::var(VarId::x(2), -1);
  EXPECT_EQ(lp_mul(inv, X(1) * X(2)), X(1) + X(2));
}

TEST(LPoly, ElementarySymmetricProduct) {
  EXPECT_EQ(lp_mul(X(1) + X(2), X(1) * X(2)), X(1).pow(2) * X(2) + X(1) * X(2).pow(2));
}

TEST(LPoly, ZeroAndCanonicalText) {
  EXPECT_TRUE(LPoly().is_zero());
  EXPECT_EQ(LPoly().to_string(), "0/1");
  EXPECT_EQ(X(1).to_string(), "1/1*X_{1,1}");
  EXPECT_TRUE((X(1) - X(1)).is_zero());
  const LPoly p = X(1).pow(2) * make_rat(3, 2) - X(2) + Rat(4);
  EXPECT_EQ(parse_lpoly(p.to_string()), p);
}

TEST(LPoly, GrlexTermOrder) {
  const LPoly p = X(2) + X(1).pow(2) + Rat(1) + X(1);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p.leading().mono, Mono::var(VarId::x(1), 2));
  EXPECT_TRUE(p.terms().back().mono.is_one());
}

TEST(LPoly, FromTermsMergesDuplicates) {
  const Mono m = Mono::var(VarId::x(1));
  const LPoly p = LPoly::from_terms({{m, Rat(2)}, {m, Rat(-2)}, {Mono(), Rat(1)}});
  EXPECT_EQ(p, LPoly(Rat(1)));
}

TEST(LPoly, Evaluation) {
  EXPECT_EQ(lp_eval(X(1) * X(2), {{VarId::x(1), 2}, {VarId::x(2), 3}}), Rat(6));
  EXPECT_EQ(lp_eval(LPoly::var(VarId::x(1), -1), {{VarId::x(1), 2}}), make_rat(1, 2));
  EXPECT_EQ(lp_eval((X(1) - X(2)).pow(2), {{VarId::x(1), 2}, {VarId::x(2), 3}}), Rat(1));
}

TEST(LPoly, EvaluationErrors) {
  EXPECT_EQ(code_of([] { lp_eval(X(1) * X(2), {{VarId::x(1), 2}}); }), Errc::MissingAssignment);
  EXPECT_EQ(code_of([] { lp_eval(LPoly::var(VarId::x(1), -1), {{VarId::x(1), 0}}); }), Errc::ZeroAtNegativeExponent);
  // A zero value at a positive exponent is fine.
  EXPECT_EQ(lp_eval(X(1), {{VarId::x(1), 0}}), Rat(0));
}

TEST(LPoly, ExactDivision) {
  EXPECT_EQ(lp_div_exact(X(1).pow(2) - X(2).pow(2), X(1) - X(2)), X(1) + X(2));
  EXPECT_EQ(code_of([&] { lp_div_exact(X(1).pow(2) + X(2), X(1) - X(2)); }), Errc::NotExact);
}

TEST(LPoly, RingAxiomsRandomized) {
  SplitMix64 rng(0xa11ce);
  const std::vector<VarId> vars{VarId::x(1), VarId::x(2), VarId::s(1), VarId::x(1, 2)};
  for (int i = 0; i < 200; ++i) {
    const LPoly a = test::random_poly(rng, vars, 20, -5, 5);
    const LPoly b = test::random_poly(rng, vars, 20, -5, 5);
    const LPoly c = test::random_poly(rng, vars, 8, -5, 5);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + (b + c), (a + b) + c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * LPoly(Rat(1)), a);
  }
}

TEST(LPoly, EvaluationIsHomomorphism) {
  SplitMix64 rng(0xe7a1);
  const std::vector<VarId> vars{VarId::x(1), VarId::x(2), VarId::x(3)};
  for (int i = 0; i < 200; ++i) {
    const LPoly a = test::random_poly(rng, vars, 10, -3, 3);
    const LPoly b = test::random_poly(rng, vars, 10, -3, 3);
    Assignment pt;
    for (const auto& v : vars) {
      long x = rng.uniform(-7, 7);
      if (x == 0) x = 5;
      pt[v] = make_rat(x, static_cast<long>(rng.uniform(1, 4)));
    }
    ASSERT_EQ(lp_eval(a * b, pt), lp_eval(a, pt) * lp_eval(b, pt));
    ASSERT_EQ(lp_eval(a + b, pt), lp_eval(a, pt) + lp_eval(b, pt));
  }
}

TEST(UPoly, DivExactFactorRemoval) {
  const LPoly s1 = X(1) + X(2), s2 = X(1) * X(2);
  const LUPoly f(std::vector<LPoly>{s2, -s1, LPoly(Rat(1))});
  const LUPoly g = LUPoly::linear_root(X(2));
  EXPECT_EQ(up_div_exact(f, g), LUPoly::linear_root(X(1)));
}

TEST(UPoly, DivExactRational) {
  EXPECT_EQ(up_div_exact(rp({-1, 0, 1}), rp({-1, 1})), rp({1, 1}));
  EXPECT_EQ(code_of([] { up_div_exact(rp({1, 0, 1}), rp({-1, 1})); }), Errc::NotExact);
  EXPECT_EQ(code_of([] { up_div_exact(rp({1, 1}), RatUPoly()); }), Errc::InvalidInput);
}

TEST(UPoly, Gcd) {
  EXPECT_EQ(up_gcd(rp({6, -5, 1}), rp({-5, 2})), rp({1}));
  EXPECT_EQ(up_gcd(rp({1, -2, 1}), rp({-2, 2})), rp({-1, 1}));
  EXPECT_EQ(up_gcd(rp({4, 2}), RatUPoly()), rp({2, 1}));
  EXPECT_EQ(code_of([] { up_gcd(RatUPoly(), RatUPoly()); }), Errc::InvalidInput);
}

TEST(UPoly, DivExactRoundTripRandomized) {
  SplitMix64 rng(0xd1f);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rat> fc, gc;
    for (int k = 0, n = static_cast<int>(rng.uniform(1, 6)); k < n; ++k) fc.push_back(make_rat(rng.uniform(-9, 9), rng.uniform(1, 5)));
    for (int k = 0, n = static_cast<int>(rng.uniform(1, 4)); k < n; ++k) gc.push_back(make_rat(rng.uniform(-9, 9), rng.uniform(1, 5)));
    gc.push_back(make_rat(rng.uniform(1, 9), 1));
    const RatUPoly f(fc), g(gc);
    ASSERT_EQ(up_div_exact(f * g, g), f);
  }
}

TEST(UPoly, SquarefreeMatchesResultantOracle) {
  SplitMix64 rng(0x5f);
  int repeated = 0;
  for (int i = 0; i < 200; ++i) {
    const int deg = static_cast<int>(rng.uniform(1, 4));
    RatUPoly f = rp({1});
    // Roots from a small range so that repeats are common.
    for (int k = 0; k < deg; ++k) f = f * RatUPoly::linear_root(Rat(rng.uniform(-3, 3)));
    if (rng.uniform(0, 3) == 0) f = f + rp({1});
    const bool coprime = up_gcd(f, f.derivative()).degree() == 0;
    const bool nonzero_disc = sylvester_resultant(f, f.derivative()) != 0;
    if (!coprime) ++repeated;
    ASSERT_EQ(coprime, nonzero_disc) << f.to_string();
  }
  EXPECT_GT(repeated, 10);
}

TEST(UPoly, RationalRoots) {
  const auto r = rational_roots(rp({6, -5, 1}));
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.residual.degree(), 0);
  const auto irr = rational_roots(rp({-2, 0, 1}));
  EXPECT_TRUE(irr.roots.empty());
  EXPECT_EQ(irr.residual.degree(), 2);
}

TEST(Linalg, RankAndDeterminant) {
  const RatMatrix m = RatMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(determinant(m), Rat(0));
  const RatMatrix n = RatMatrix::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(3)}});
  EXPECT_EQ(determinant(n), Rat(5));
  EXPECT_EQ(determinant(kron(n, n)), Rat(625));
  EXPECT_EQ(rank(RatMatrix::identity(4)), 4u);
}

TEST(Linalg, BareissMatchesDivisionFree) {
  SplitMix64 rng(0xba7e);
  const std::vector<VarId> vars{VarId::s(1), VarId::s(2)};
  for (int i = 0; i < 30; ++i) {
    std::vector<std::vector<LPoly>> m(3, std::vector<LPoly>(3));
    for (auto& row : m)
      for (auto& c : row) c = test::random_poly(rng, vars, 3, 0, 2);
    ASSERT_EQ(bareiss_determinant(m), divfree_determinant(m, [](const LPoly& a, const LPoly& b) { return a * b; }));
  }
}
