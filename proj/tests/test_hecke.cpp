#include <gtest/gtest.h>

#include "heckecentre/error.hpp"
#include "heckecentre/hecke.hpp"
#include "heckecentre/sampling.hpp"
#include "test_util.hpp"

using namespace hc;
using hc::test::S;
using hc::test::X;

namespace {

FiberPoint roots(std::vector<long> r) {
  FiberPoint out;
  std::vector<Rat> b;
  for (long x : r) b.push_back(Rat(x));
  out.roots.push_back(std::move(b));
  return out;
}

CentrePoint m_of(std::vector<long> r) { return centre_point_of(roots(std::move(r))); }

FinHeckeElt T(int e, const Rat& q, int i) { return FinHeckeElt::generator(e, q, i); }

const IdempotentTag& tag_of(const std::vector<IdempotentTag>& tags, const Partition& p) {
  for (const auto& t : tags)
    if (t.lambda == p) return t;
  throw std::runtime_error("no idempotent for " + p.to_string());
}

std::size_t regular_rank(const FinHeckeElt& e) { return rank(fin_left_matrix(e)); }

}  // namespace

TEST(FinHecke, QuadraticRelation) {
  const Rat q = 3;
  const FinHeckeElt t = T(2, q, 1);
  EXPECT_EQ(t * t, (q - 1) * t + q * FinHeckeElt::one(2, q));
  EXPECT_EQ(FinHeckeElt::one(2, q) * t, t);
}

TEST(FinHecke, BraidRelation) {
  const Rat q = 2;
  const FinHeckeElt a = T(3, q, 1), b = T(3, q, 2);
  EXPECT_EQ(a * b * a, b * a * b);
  const Perm w0 = Perm::simple(3, 0) * Perm::simple(3, 1) * Perm::simple(3, 0);
  EXPECT_EQ(a * b * a, FinHeckeElt::basis(w0, q));
}

TEST(FinHecke, ParameterMismatch) {
  try {
    fin_mul(T(2, 2, 1), T(2, 3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParameterMismatch);
  }
  EXPECT_THROW(fin_mul(T(2, 2, 1), T(3, 2, 1)), Error);
}

TEST(FinHecke, RelationsExhaustiveOnBasis) {
  for (int e = 2; e <= 3; ++e) {
    for (const Rat& q : {Rat(2), make_rat(-3, 2)}) {
      for (int i = 1; i < e; ++i) {
        const auto ti = T(e, q, i);
        ASSERT_EQ((ti - q * FinHeckeElt::one(e, q)) * (ti + FinHeckeElt::one(e, q)), FinHeckeElt::zero(e, q));
        for (int j = 1; j < e; ++j) {
          const auto tj = T(e, q, j);
          if (std::abs(i - j) == 1) {
            ASSERT_EQ(ti * tj * ti, tj * ti * tj);
          } else if (i != j) {
            ASSERT_EQ(ti * tj, tj * ti);
          }
        }
      }
      const auto perms = all_perms(e);
      for (const auto& u : perms)
        for (const auto& v : perms)
          for (const auto& w : perms) {
            const auto a = FinHeckeElt::basis(u, q), b = FinHeckeElt::basis(v, q), c = FinHeckeElt::basis(w, q);
            ASSERT_EQ((a * b) * c, a * (b * c));
          }
    }
  }
}

TEST(Idempotents, TwoStrands) {
  const Rat q = 2;
  const auto tags = primitive_idempotents(2, q);
  ASSERT_EQ(tags.size(), 2u);
  const auto one = FinHeckeElt::one(2, q), t = T(2, q, 1);
  EXPECT_EQ(tag_of(tags, Partition({2})).element, (t + one) * (Rat(1) / (q + 1)));
  EXPECT_EQ(tag_of(tags, Partition({1, 1})).element, (q * one - t) * (Rat(1) / (q + 1)));
}

TEST(Idempotents, OneStrand) {
  const auto tags = primitive_idempotents(1, 2);
  ASSERT_EQ(tags.size(), 1u);
  EXPECT_EQ(tags[0].element, FinHeckeElt::one(1, 2));
}

TEST(Idempotents, DegenerateParameter) {
  try {
    primitive_idempotents(2, -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateParameter);
  }
}

TEST(Idempotents, RanksMatchHookLengths) {
  for (int e = 1; e <= 4; ++e) {
    for (const Rat& q : {Rat(2), Rat(3)}) {
      const auto prim = primitive_idempotents(e, q);
      for (std::size_t a = 0; a < prim.size(); ++a) {
        const auto& x = prim[a].element;
        ASSERT_EQ(x * x, x);
        ASSERT_EQ(regular_rank(x), f_lambda(prim[a].lambda)) << prim[a].lambda.to_string();
        for (std::size_t b = 0; b < prim.size(); ++b)
          if (a != b) {
            ASSERT_TRUE((x * prim[b].element).is_zero());
          }
      }
    }
  }
  // e = 3, lambda = (2,1) acting on the 6-dimensional regular representation.
  EXPECT_EQ(regular_rank(tag_of(primitive_idempotents(3, 2), Partition({2, 1})).element), 2u);
}

TEST(Idempotents, CentralSumToOne) {
  for (int e = 1; e <= 3; ++e) {
    const Rat q = 2;
    const auto central = central_idempotents(e, q);
    FinHeckeElt sum = FinHeckeElt::zero(e, q);
    for (const auto& c : central) {
      sum += c.element;
      EXPECT_EQ(c.kind, IdempotentTag::Kind::CentralIsotypic);
      EXPECT_EQ(c.element * c.element, c.element);
      for (int i = 1; i < e; ++i) EXPECT_EQ(c.element * T(e, q, i), T(e, q, i) * c.element);
      // The full tableau family sums to the central idempotent.
      FinHeckeElt fam = FinHeckeElt::zero(e, q);
      for (const auto& t : standard_tableaux(c.lambda)) fam += tableau_idempotent(t, q);
      EXPECT_EQ(fam, c.element);
      EXPECT_EQ(regular_rank(c.element), f_lambda(c.lambda) * f_lambda(c.lambda));
    }
    EXPECT_EQ(sum, FinHeckeElt::one(e, q));
  }
}

TEST(JucysMurphy, Commute) {
  const Rat q = 3;
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k)
      EXPECT_EQ(jucys_murphy(4, q, j) * jucys_murphy(4, q, k), jucys_murphy(4, q, k) * jucys_murphy(4, q, j));
}

TEST(AffHecke, XMultiplication) {
  const Rat q = 2;
  EXPECT_EQ(AffHeckeElt::x_power({1, 0}, q) * AffHeckeElt::x_power({0, 1}, q), AffHeckeElt::x_power({1, 1}, q));
}

TEST(AffHecke, SymmetricMonomialCommutes) {
  const Rat q = 2;
  const auto x = AffHeckeElt::x_power({1, 1}, q);
  const auto t = AffHeckeElt::from_fin(T(2, q, 1));
  EXPECT_TRUE((x * t - t * x).is_zero());
}

TEST(AffHecke, BraidPersistsRandomized) {
  const Rat q = 3;
  SplitMix64 rng(0xb4a1);
  const auto a = AffHeckeElt::from_fin(T(3, q, 1)), b = AffHeckeElt::from_fin(T(3, q, 2));
  const auto braid = a * b * a - b * a * b;
  for (int i = 0; i < 50; ++i) {
    std::vector<int> lambda(3);
    for (auto& x : lambda) x = static_cast<int>(rng.uniform(-3, 3));
    ASSERT_TRUE((braid * AffHeckeElt::x_power(lambda, q)).is_zero());
  }
}

TEST(AffHecke, FiniteSubalgebraAgrees) {
  const Rat q = 2;
  for (const auto& u : all_perms(3))
    for (const auto& v : all_perms(3)) {
      const auto fu = FinHeckeElt::basis(u, q), fv = FinHeckeElt::basis(v, q);
      ASSERT_EQ(AffHeckeElt::from_fin(fu) * AffHeckeElt::from_fin(fv), AffHeckeElt::from_fin(fu * fv));
    }
}

TEST(AffHecke, CommutationConvention) {
  const Rat q = 2;
  // T_1 X_1 = X_2 T_1 + (q - 1) X_1.
  const auto lhs = t_times_x(1, {1, 0}, q);
  const auto rhs = AffHeckeElt::basis({0, 1}, Perm::simple(2, 0), q) + AffHeckeElt::x_power({1, 0}, q) * (q - 1);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(AffHeckeElt::from_fin(T(2, q, 1)) * AffHeckeElt::x_power({1, 0}, q), lhs);
}

TEST(AffHecke, AssociativityRandomized) {
  const Rat q = 3;
  SplitMix64 rng(0xa550);
  for (int e = 2; e <= 3; ++e) {
    const auto perms = all_perms(e);
    auto random_elt = [&] {
      AffHeckeElt out = AffHeckeElt::zero(e, q);
      for (int t = 0; t < 2; ++t) {
        std::vector<int> a(static_cast<std::size_t>(e));
        for (auto& x : a) x = static_cast<int>(rng.uniform(-2, 2));
        const auto& w = perms[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(perms.size()) - 1))];
        out += AffHeckeElt::basis(a, w, q) * Rat(rng.uniform(1, 3));
      }
      return out;
    };
    for (int i = 0; i < (e == 2 ? 200 : 40); ++i) {
      const auto a = random_elt(), b = random_elt(), c = random_elt();
      ASSERT_EQ((a * b) * c, a * (b * c));
    }
  }
}

TEST(AffHecke, ForeignVariablesRejected) {
  EXPECT_THROW(AffHeckeElt::from_poly(2, 2, X(3)), Error);
  EXPECT_THROW(aff_mul(AffHeckeElt::one(2, 2), AffHeckeElt::one(2, 3)), Error);
}

TEST(Centre, Examples) {
  const Rat q = 2;
  EXPECT_TRUE(centre_check(SymCoords{S(1)}, 2, q));
  EXPECT_FALSE(centre_check(X(1), 2, q));
  EXPECT_TRUE(centre_check(SymCoords{LPoly::var(VarId::s(2), -1)}, 2, q));
  EXPECT_TRUE(centre_check(SymCoords{S(2) * S(1) - S(3)}, 3, q));
  EXPECT_FALSE(centre_check(X(1) * X(2), 3, q));
}

TEST(Specialize, Dimensions) {
  EXPECT_EQ(SpecAlgebra::specialize(1, 2, m_of({5})).dim(), 1u);
  EXPECT_EQ(SpecAlgebra::specialize(2, 2, m_of({1, 3})).dim(), 4u);
  EXPECT_EQ(SpecAlgebra::specialize(3, 2, m_of({1, 3, 9})).dim(), 36u);
  EXPECT_EQ(SpecAlgebra::specialize(BlockShape({2, 2}), 2, centre_point_of(FiberPoint{{{1, 3}, {5, 7}}})).dim(), 16u);
  EXPECT_THROW(SpecAlgebra::specialize(3, 2, m_of({1, 3})), Error);
}

TEST(Specialize, AssociativeAndUnital) {
  for (const auto& r : {std::vector<long>{1, 3}, std::vector<long>{1, 2}, std::vector<long>{1, 1}}) {
    const auto a = SpecAlgebra::specialize(2, 3, m_of(r));
    EXPECT_TRUE(a.is_associative());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      EXPECT_EQ(a.mul(a.unit(), a.basis_vector(i)), a.basis_vector(i));
      EXPECT_EQ(a.mul(a.basis_vector(i), a.unit()), a.basis_vector(i));
    }
  }
  EXPECT_TRUE(SpecAlgebra::specialize(3, 2, m_of({1, 3, 9})).is_associative());
}

TEST(Specialize, EmbedsFiniteAlgebra) {
  const Rat q = 2;
  const auto a = SpecAlgebra::specialize(3, q, m_of({1, 3, 9}));
  for (const auto& u : all_perms(3))
    for (const auto& v : all_perms(3)) {
      const auto fu = FinHeckeElt::basis(u, q), fv = FinHeckeElt::basis(v, q);
      ASSERT_EQ(a.mul(a.embed(fu), a.embed(fv)), a.embed(fu * fv));
    }
}

TEST(Sandwich, Examples) {
  const Rat q = 2;
  const auto p2 = primitive_idempotents(2, q);
  const auto a2 = SpecAlgebra::specialize(2, q, m_of({1, 3}));
  EXPECT_EQ(sandwich_dim(tag_of(p2, Partition({2})), tag_of(p2, Partition({1, 1})), a2), 1u);
  EXPECT_EQ(sandwich_dim(tag_of(p2, Partition({2})), tag_of(p2, Partition({2})), a2), 1u);
  const auto p3 = primitive_idempotents(3, q);
  const auto a3 = SpecAlgebra::specialize(3, q, m_of({1, 3, 9}));
  EXPECT_EQ(sandwich_dim(tag_of(p3, Partition({2, 1})), tag_of(p3, Partition({2, 1})), a3), 4u);
}

TEST(Sandwich, FullTableAtSampledPoints) {
  SplitMix64 rng(0x6a11);
  for (int e = 2; e <= 3; ++e) {
    for (const Rat& q : {Rat(2), Rat(3)}) {
      const QParam qp = QParam::make(q, e);
      const auto prim = primitive_idempotents(e, q);
      for (int i = 0; i < 5; ++i) {
        const FiberPoint fp = sample_in_s_point(BlockShape({e}), qp, LinkageMode::WithinBlock, rng);
        const auto a = SpecAlgebra::specialize(e, q, centre_point_of(fp));
        for (const auto& x : prim)
          for (const auto& y : prim) ASSERT_EQ(sandwich_dim(x, y, a), f_lambda(x.lambda) * f_lambda(y.lambda));
      }
    }
  }
}

TEST(Simple, Examples) {
  const Rat q = 2;
  const auto in_s = simple_check(SpecAlgebra::specialize(2, q, m_of({1, 3})));
  EXPECT_EQ(in_s.centre_dim, 1u);
  EXPECT_TRUE(in_s.semisimple);
  EXPECT_TRUE(in_s.matrix_algebra);
  EXPECT_FALSE(simple_check(SpecAlgebra::specialize(2, q, m_of({1, 2}))).matrix_algebra);
  const auto one = simple_check(SpecAlgebra::specialize(1, q, m_of({4})));
  EXPECT_EQ(one.centre_dim, 1u);
  EXPECT_TRUE(one.matrix_algebra);
  EXPECT_TRUE(simple_check(SpecAlgebra::specialize(3, q, m_of({1, 3, 9}))).matrix_algebra);
  EXPECT_FALSE(simple_check(SpecAlgebra::specialize(3, q, m_of({1, 2, 4}))).matrix_algebra);
}

// A repeated root with no q-ratio still gives an irreducible principal
// series, so the fibre algebra is a full matrix algebra there; only its
// commutative part is non-reduced.
TEST(Simple, RepeatedUnlinkedRootStillMatrixAlgebra) {
  const auto a = SpecAlgebra::specialize(2, 2, m_of({3, 3}));
  const auto v = simple_check(a);
  EXPECT_EQ(v.centre_dim, 1u);
  EXPECT_TRUE(v.matrix_algebra);
  // X_2 - 3 is a nonzero nilpotent of the commutative part.
  const auto x = a.embed(AffHeckeElt::x_power({0, 1}, 2) - AffHeckeElt::one(2, 2) * Rat(3));
  EXPECT_NE(x, std::vector<Rat>(4, Rat(0)));
  EXPECT_EQ(a.mul(x, x), std::vector<Rat>(4, Rat(0)));
}

TEST(Simple, RepeatedAndLinkedRoots) {
  EXPECT_FALSE(simple_check(SpecAlgebra::specialize(3, 2, m_of({2, 1, 1}))).matrix_algebra);
}

TEST(UnitMap, ExtremePartitions) {
  const Rat q = 3;
  for (int e = 2; e <= 3; ++e) {
    const auto prim = primitive_idempotents(e, q);
    const auto a = SpecAlgebra::specialize(e, q, m_of(e == 2 ? std::vector<long>{2, 7} : std::vector<long>{2, 7, 11}));
    EXPECT_TRUE(unit_map_surjective(tag_of(prim, Partition::row(e)), a));
    EXPECT_TRUE(unit_map_surjective(tag_of(prim, Partition::column(e)), a));
    if (e == 3) {
      EXPECT_FALSE(unit_map_surjective(tag_of(prim, Partition({2, 1})), a));
    }
  }
}

TEST(BaseChange, Examples) {
  const auto p2q2 = primitive_idempotents(2, 2);
  EXPECT_TRUE(base_change_commutes(tag_of(p2q2, Partition({2})), tag_of(p2q2, Partition({1, 1})), 2, 2, m_of({1, 3})));
  const auto p2q3 = primitive_idempotents(2, 3);
  EXPECT_TRUE(base_change_commutes(tag_of(p2q3, Partition({2})), tag_of(p2q3, Partition({2})), 2, 3, m_of({2, 3})));
  const auto p3 = primitive_idempotents(3, 2);
  const auto bc = base_change(tag_of(p3, Partition({3})), tag_of(p3, Partition({2, 1})), 3, 2, m_of({1, 3, 9}));
  EXPECT_EQ(bc.specialized, 2u);
  EXPECT_EQ(bc.affine_first, 2u);
}

TEST(Tensor, TwoBlocks) {
  const Rat q = 2;
  const CentrePoint m = centre_point_of(FiberPoint{{{Rat(1), Rat(3)}, {Rat(5), Rat(7)}}});
  const auto a = SpecAlgebra::specialize(BlockShape({2, 2}), q, m);
  EXPECT_TRUE(a.is_associative());
  const auto p = primitive_idempotents(2, q);
  const auto e1 = a.embed(std::vector<FinHeckeElt>{p[0].element, p[1].element});
  EXPECT_EQ(a.mul(e1, e1), e1);
  EXPECT_EQ(sandwich_dim(e1, e1, a), 1u);
  EXPECT_TRUE(simple_check(a).matrix_algebra);
}
