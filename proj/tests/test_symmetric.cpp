#include <gtest/gtest.h>

#include "heckecentre/error.hpp"
#include "heckecentre/symmetric.hpp"
#include "test_util.hpp"

using namespace hc;
using hc::test::S;
using hc::test::X;

namespace {

const BlockShape kTwo({2});
const BlockShape kThree({3});
const BlockShape kTwoThree({2, 3});

LPoly random_in_shape(SplitMix64& rng, const BlockShape& shape, int terms, int lo, int hi) {
  return test::random_poly(rng, shape.x_variables(), terms, lo, hi);
}

const GroupElem& pick(SplitMix64& rng, const std::vector<GroupElem>& g) {
  return g[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(g.size()) - 1))];
}

}  // namespace

TEST(BlockShape, GroupOrder) {
  EXPECT_EQ(kTwoThree.group_order(), 12u);
  EXPECT_EQ(kTwoThree.total_variables(), 5);
  EXPECT_EQ(group_elements(kTwoThree).size(), 12u);
  EXPECT_THROW(BlockShape({0}), Error);
  EXPECT_THROW(BlockShape(std::vector<int>{}), Error);
}

TEST(Action, SwapInBlockOfSizeTwo) {
  const GroupElem swap = GroupElem::transposition(kTwo, 1, 1);
  EXPECT_EQ(act(swap, X(1)), X(2));
}

TEST(Action, OtherBlockFixed) {
  const GroupElem g = GroupElem::transposition(kTwoThree, 2, 1);
  EXPECT_EQ(act(g, X(1, 1)), X(1, 1));
  EXPECT_EQ(act(g, X(1, 2)), X(2, 2));
}

TEST(Action, SquaredDifferenceInvariant) {
  const GroupElem swap = GroupElem::transposition(kTwo, 1, 1);
  const LPoly d = (X(1) - X(2)).pow(2);
  EXPECT_EQ(act(swap, d), d);
}

TEST(Action, ShapeMismatch) {
  const GroupElem swap = GroupElem::transposition(kTwo, 1, 1);
  try {
    act(swap, X(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  }
}

TEST(Action, GroupActionRandomized) {
  SplitMix64 rng(0xac7);
  const auto g = group_elements(kTwoThree);
  for (int i = 0; i < 200; ++i) {
    const GroupElem& a = pick(rng, g);
    const GroupElem& b = pick(rng, g);
    const LPoly p = random_in_shape(rng, kTwoThree, 8, -3, 3);
    ASSERT_EQ(act(a * b, p), act(a, act(b, p)));
    ASSERT_EQ(act(GroupElem::identity(kTwoThree), p), p);
    ASSERT_EQ(act(a.inverse(), act(a, p)), p);
  }
}

TEST(ElemSym, Values) {
  EXPECT_EQ(elem_sym(kThree, 1, 2), X(1) * X(2) + X(1) * X(3) + X(2) * X(3));
  EXPECT_EQ(elem_sym(kThree, 1, 0), LPoly(Rat(1)));
  EXPECT_EQ(elem_sym(kTwo, 1, 2), X(1) * X(2));
  EXPECT_EQ(elem_sym(kTwoThree, 2, 3), X(1, 2) * X(2, 2) * X(3, 2));
  try {
    elem_sym(kTwo, 1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OutOfRange);
  }
}

TEST(Reynolds, Examples) {
  EXPECT_EQ(reynolds(kTwo, X(1)), (X(1) + X(2)) * make_rat(1, 2));
  const LPoly inv = X(1) * X(2) + Rat(3);
  EXPECT_EQ(reynolds(kTwo, inv), inv);
  EXPECT_TRUE(reynolds(kTwo, X(1) - X(2)).is_zero());
}

TEST(Reynolds, IdempotentRandomized) {
  SplitMix64 rng(0x7e1);
  for (int i = 0; i < 200; ++i) {
    const LPoly p = random_in_shape(rng, kTwoThree, 6, -2, 2);
    const LPoly r = reynolds(kTwoThree, p);
    ASSERT_EQ(reynolds(kTwoThree, r), r);
    ASSERT_TRUE(is_invariant(kTwoThree, r));
  }
}

TEST(Invariance, Examples) {
  EXPECT_TRUE(is_invariant(kTwo, (X(1) - X(2)).pow(2)));
  EXPECT_FALSE(is_invariant(kTwo, X(1)));
  EXPECT_TRUE(is_invariant(kTwo, X(1) * X(2)));
}

TEST(SymCoords, ToCoords) {
  EXPECT_EQ(to_sym_coords(kTwo, X(1).pow(2) + X(2).pow(2)).value, S(1).pow(2) - S(2) * Rat(2));
  const LPoly inv = LPoly::var(VarId::x(1), -1) + LPoly::var(VarId::x(2), -1);
  EXPECT_EQ(to_sym_coords(kTwo, inv).value, S(1) * LPoly::var(VarId::s(2), -1));
  EXPECT_EQ(to_sym_coords(kTwo, (X(1) - X(2)).pow(2)).value, S(1).pow(2) - S(2) * Rat(4));
}

TEST(SymCoords, NotInvariant) {
  try {
    to_sym_coords(kTwo, X(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInvariant);
  }
}

TEST(SymCoords, FromCoords) {
  EXPECT_EQ(from_sym_coords(kTwo, {S(1)}), X(1) + X(2));
  EXPECT_EQ(from_sym_coords(kTwo, {LPoly::var(VarId::s(2), -1)}),
            LPoly::var(VarId::x(1), -1) * LPoly::var(VarId::x(2), -1));
  EXPECT_EQ(from_sym_coords(kTwo, {S(1).pow(2) - S(2) * Rat(4)}), (X(1) - X(2)).pow(2));
}

TEST(SymCoords, InvalidCoordinates) {
  // Negative exponents are only allowed on the top coordinate.
  EXPECT_THROW(validate_sym_coords({LPoly::var(VarId::s(1), -1)}, kTwo), Error);
  EXPECT_THROW(validate_sym_coords({S(3)}, kTwo), Error);
  EXPECT_NO_THROW(validate_sym_coords({LPoly::var(VarId::s(2), -2) * S(1)}, kTwo));
}

TEST(SymCoords, RoundTripRandomized) {
  SplitMix64 rng(0x7007);
  for (const auto& shape : {kTwo, kThree, kTwoThree}) {
    for (int i = 0; i < 200; ++i) {
      const LPoly p = reynolds(shape, random_in_shape(rng, shape, 4, -2, 2));
      const SymCoords c = to_sym_coords(shape, p);
      ASSERT_EQ(from_sym_coords(shape, c), p);
      ASSERT_EQ(to_sym_coords(shape, from_sym_coords(shape, c)), c);
    }
  }
}

TEST(SymCoords, BlockIndependenceRandomized) {
  SplitMix64 rng(0xb10c);
  const BlockShape b1({2}), b2({3});
  for (int i = 0; i < 200; ++i) {
    const LPoly p1 = reynolds(b1, test::random_poly(rng, b1.x_variables(), 3, -1, 2));
    // Block-2 variables carry block index 2 in the product shape.
    const LPoly q = reynolds(kTwoThree, test::random_poly(rng, {VarId::x(1, 2), VarId::x(2, 2), VarId::x(3, 2)}, 3, -1, 2));
    const SymCoords whole = to_sym_coords(kTwoThree, p1 * q);
    ASSERT_EQ(whole.value, to_sym_coords(kTwoThree, p1).value * to_sym_coords(kTwoThree, q).value);
  }
}
