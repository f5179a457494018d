#include "heckecentre/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "heckecentre/artin.hpp"
#include "heckecentre/error.hpp"
#include "heckecentre/fiber.hpp"
#include "heckecentre/hecke.hpp"
#include "heckecentre/partitions.hpp"
#include "heckecentre/rng.hpp"
#include "heckecentre/sampling.hpp"

namespace hc {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

const std::string& expected(const Expectations& e, const std::string& key) {
  auto it = e.find(key);
  if (it == e.end()) throw Error(Errc::InvalidInput, "missing expectation " + key);
  return it->second;
}

/// Compares and records a mismatch.
void check_value(Outcome& out, const Expectations& e, const std::string& key, const std::string& got) {
  const std::string& want = expected(e, key);
  if (got != want) {
    out.pass = false;
    out.detail += " [" + key + ": got " + got + ", expected " + want + "]";
  }
}

void fail(Outcome& out, const std::string& why) {
  if (out.pass || out.detail.size() < 400) out.detail += " [" + why + "]";
  out.pass = false;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string join_table(const std::vector<std::vector<std::uint64_t>>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(t[i][j]);
    }
  }
  return out;
}

std::vector<int> hecke_ranks(const AcceptanceLimits& limits) {
  std::vector<int> out;
  for (int e : {2, 3})
    if (e <= limits.max_e) out.push_back(e);
  return out;
}

FiberPoint single_block(std::initializer_list<long> roots) {
  FiberPoint fp;
  fp.roots.emplace_back();
  for (long r : roots) fp.roots[0].emplace_back(r);
  return fp;
}

// ---- random generators for the property suites ----

struct VarRange {
  VarId v;
  int lo, hi;
};

LPoly random_poly(SplitMix64& rng, const std::vector<VarRange>& vars, int max_terms) {
  std::vector<Term> terms;
  const auto count = rng.uniform(0, max_terms);
  for (std::int64_t t = 0; t < count; ++t) {
    std::vector<Mono::Entry> entries;
    for (const auto& [v, lo, hi] : vars) {
      const int x = static_cast<int>(rng.uniform(lo, hi));
      if (x != 0) entries.emplace_back(v.code(), x);
    }
    std::sort(entries.begin(), entries.end());
    const auto num = rng.uniform(-5, 5);
    const auto den = rng.uniform(1, 3);
    terms.push_back({Mono::from_entries(std::move(entries)), make_rat(static_cast<long>(num), static_cast<long>(den))});
  }
  return LPoly::from_terms(std::move(terms));
}

std::vector<VarRange> x_ranges(const BlockShape& shape, int lo, int hi) {
  std::vector<VarRange> out;
  for (const VarId& v : shape.x_variables()) out.push_back({v, lo, hi});
  return out;
}

std::vector<VarRange> s_ranges(const BlockShape& shape) {
  std::vector<VarRange> out;
  for (int i = 1; i <= shape.blocks(); ++i)
    for (int k = 1; k <= shape.size(i); ++k) {
      const bool top = k == shape.size(i);
      out.push_back({VarId::s(k, i), top ? -1 : 0, 1});
    }
  return out;
}

const std::vector<Rat>& q_pool() {
  static const std::vector<Rat> pool{Rat(2), Rat(3), Rat(4), Rat(5), Rat(-2), Rat(-3), make_rat(1, 2), make_rat(2, 3), make_rat(3, 2), make_rat(-1, 2)};
  return pool;
}

template <class T>
const T& pick(SplitMix64& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
}

FinHeckeElt random_fin(SplitMix64& rng, int e, const Rat& q) {
  FinHeckeElt f = FinHeckeElt::zero(e, q);
  const auto terms = rng.uniform(1, 3);
  for (std::int64_t t = 0; t < terms; ++t)
    f.coeffs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(f.dim()) - 1))] += Rat(static_cast<long>(rng.uniform(-3, 3)));
  return f;
}

AffHeckeElt random_aff(SplitMix64& rng, int e, const Rat& q) {
  const auto perms = all_perms(e);
  AffHeckeElt a = AffHeckeElt::zero(e, q);
  const auto terms = rng.uniform(1, 2);
  for (std::int64_t t = 0; t < terms; ++t) {
    std::vector<int> lambda(static_cast<std::size_t>(e));
    for (int& x : lambda) x = static_cast<int>(rng.uniform(-2, 2));
    a += AffHeckeElt::basis(lambda, pick(rng, perms), q) * Rat(static_cast<long>(rng.uniform(1, 3)));
  }
  return a;
}

// ---- criteria ----

Outcome discriminant_law(const AcceptanceLimits& limits, const Expectations& ex) {
  Outcome out;
  for (int e = 1; e <= std::min(4, limits.max_e); ++e) {
    const auto t0 = Clock::now();
    const DiscPower r = disc_power_check(e);
    const double secs = since(t0);
    if (!(r.delta.value == r.d.value.pow(static_cast<unsigned>(r.k)) * r.c)) fail(out, "Delta != c*d^k at e=" + std::to_string(e));
    const std::string got = "c=" + rat_to_string(r.c) + ",k=" + std::to_string(r.k);
    check_value(out, ex, "disc.e" + std::to_string(e), got);
    if (e == 2 && !(r.delta.value == parse_lpoly(expected(ex, "disc.delta.e2")))) fail(out, "Delta at e=2 is " + r.delta.to_string());
    if (e == 4 && secs >= 10.0) fail(out, "e=4 took " + fmt_seconds(secs) + " (target < 10s)");
    out.detail += " e=" + std::to_string(e) + ":(" + rat_to_string(r.c) + "," + std::to_string(r.k) + ")";
  }
  return out;
}

Outcome fiber_splitting(const AcceptanceLimits& limits, const Expectations& ex) {
  Outcome out;
  SplitMix64 rng(0x5eed0002);
  int shapes = 0;
  for (const auto& sizes : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {2, 3}}) {
    const BlockShape shape(sizes);
    if (*std::max_element(sizes.begin(), sizes.end()) > limits.max_e || shape.group_order() > limits.max_group) continue;
    ++shapes;
    const std::size_t w = shape.group_order();
    for (int i = 0; i < 50; ++i) {
      const FiberPoint fp = sample_distinct_point(shape, rng);
      const auto orbit = fiber_orbit(fp);
      const auto s = split_check(fp);
      if (!s.split || s.dim != w || orbit.size() != w) fail(out, "distinct point not split on " + shape.to_string());
      if (i == 0) check_value(out, ex, "fiber.orbit." + shape.to_string(), std::to_string(orbit.size()));
    }
    for (int i = 0; i < 20; ++i) {
      const FiberPoint fp = sample_repeated_point(shape, rng);
      if (split_check(fp).split) fail(out, "repeated-root point split on " + shape.to_string());
    }
  }
  if (shapes == 0) out.skipped = true;
  out.detail += " " + std::to_string(shapes) + " shapes x (50 distinct + 20 repeated)";
  return out;
}

Outcome dense_dichotomy(const AcceptanceLimits& limits, const Expectations& ex) {
  Outcome out;
  const Rat q(2);
  const QParam qp = QParam::make(q, 3);
  for (int e : hecke_ranks(limits)) {
    const FiberPoint good = e == 2 ? single_block({1, 3}) : single_block({1, 3, 9});
    const FiberPoint linked = e == 2 ? single_block({1, 2}) : single_block({1, 2, 4});
    if (!in_dense_set(good, qp).in_s()) fail(out, "regular point not in S at e=" + std::to_string(e));
    if (in_dense_set(linked, qp).kind != DenseSetVerdict::Kind::Linked) fail(out, "linked point not Linked at e=" + std::to_string(e));
    const auto sg = simple_check(SpecAlgebra::specialize(e, q, centre_point_of(good)));
    const auto sl = simple_check(SpecAlgebra::specialize(e, q, centre_point_of(linked)));
    auto enc = [](const SimpleVerdict& v) {
      return std::to_string(v.centre_dim) + "," + (v.semisimple ? "1" : "0") + "," + (v.matrix_algebra ? "1" : "0");
    };
    check_value(out, ex, "simple.e" + std::to_string(e) + ".in_s", enc(sg));
    check_value(out, ex, "simple.e" + std::to_string(e) + ".linked.matrix_algebra", sl.matrix_algebra ? "1" : "0");
    out.detail += " e=" + std::to_string(e) + ": InS {" + enc(sg) + "} Linked {" + enc(sl) + "}";
  }
  if (hecke_ranks(limits).empty()) out.skipped = true;
  return out;
}

std::vector<std::vector<std::uint64_t>> ff_table(int e) {
  std::vector<std::vector<std::uint64_t>> t;
  for (const auto& a : partitions_of(e)) {
    t.emplace_back();
    for (const auto& b : partitions_of(e)) t.back().push_back(f_lambda(a) * f_lambda(b));
  }
  return t;
}

Outcome rank_law(const AcceptanceLimits& limits, const Expectations& ex) {
  Outcome out;
  std::size_t points = 0, exceptions = 0;
  for (int e : hecke_ranks(limits)) {
    const auto want = ff_table(e);
    check_value(out, ex, "rank.e" + std::to_string(e), join_table(want));
    for (long qv : {2L, 3L}) {
      const Rat q(qv);
      const auto prim = primitive_idempotents(e, q);
      SplitMix64 rng(0x5eed0400 + static_cast<std::uint64_t>(10 * e + qv));
      for (int i = 0; i < 25; ++i) {
        const FiberPoint fp = sample_in_s_point(BlockShape({e}), QParam::make(q, e), LinkageMode::WithinBlock, rng);
        const SpecAlgebra A = SpecAlgebra::specialize(e, q, centre_point_of(fp));
        ++points;
        for (std::size_t a = 0; a < prim.size(); ++a)
          for (std::size_t b = 0; b < prim.size(); ++b)
            if (sandwich_dim(prim[a], prim[b], A) != want[a][b]) {
              ++exceptions;
              fail(out, "e=" + std::to_string(e) + " q=" + std::to_string(qv) + " pair " + prim[a].lambda.to_string() +
                            "," + prim[b].lambda.to_string());
            }
      }
    }
  }
  if (points == 0) out.skipped = true;
  out.detail += " " + std::to_string(points) + " InS points, " + std::to_string(exceptions) + " exceptions";
  return out;
}

Outcome mult_one_isomorphism(const AcceptanceLimits& limits, const Expectations& ex) {
  Outcome out;
  std::size_t points = 0;
  const std::string want = expected(ex, "unit.sandwich_dim");
  for (int e : hecke_ranks(limits))
    for (long qv : {2L, 3L}) {
      const Rat q(qv);
      const auto prim = primitive_idempotents(e, q);
      const std::vector<const IdempotentTag*> ends{&prim.front(), &prim.back()};
      SplitMix64 rng(0x5eed0500 + static_cast<std::uint64_t>(10 * e + qv));
      for (int i = 0; i < 25; ++i) {
        const FiberPoint fp = sample_in_s_point(BlockShape({e}), QParam::make(q, e), LinkageMode::WithinBlock, rng);
        const SpecAlgebra A = SpecAlgebra::specialize(e, q, centre_point_of(fp));
        ++points;
        for (const IdempotentTag* t : ends) {
          if (std::to_string(sandwich_dim(*t, *t, A)) != want) fail(out, "sandwich dim for " + t->lambda.to_string());
          if (!unit_map_surjective(*t, A)) fail(out, "unit map not onto for " + t->lambda.to_string());
        }
      }
    }
  if (points == 0) out.skipped = true;
  out.detail += " " + std::to_string(points) + " InS points x {(e),(1^e)}";
  return out;
}

Outcome combinatorics(const AcceptanceLimits& limits, const Expectations& ex) {
  Outcome out;
  const auto shapes = shapes_up_to(limits.max_group);
  for (const auto& shape : shapes) {
    const auto r = identity_check(shape, limits.max_group);
    if (!r.ok) fail(out, "sum m^2 != |W| on " + shape.to_string());
    int big = 0;
    for (int e : shape.sizes())
      if (e >= 2) ++big;
    if (count_mult_one(shape) != (std::uint64_t{1} << big)) fail(out, "multiplicity-one count on " + shape.to_string());
  }
  if (limits.max_group >= 6) {
    check_value(out, ex, "mult.sum.(3)", std::to_string(identity_check(BlockShape({3}), limits.max_group).sum_m_sq));
    check_value(out, ex, "mult.count.(3)", std::to_string(count_mult_one(BlockShape({3}))));
  }
  if (limits.max_group >= 12) check_value(out, ex, "mult.count.(2,3)", std::to_string(count_mult_one(BlockShape({2, 3}))));

  for (int n = 1; n <= 7; ++n) {
    std::uint64_t sum = 0, fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
    for (const auto& p : partitions_of(n)) sum += f_lambda(p) * f_lambda(p);
    if (sum != fact) fail(out, "sum f^2 != n! at n=" + std::to_string(n));
  }
  std::size_t rsk_pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> seen;
    for (const auto& w : all_perms(n)) {
      const auto [p, q] = rsk(w);
      if (!p.is_standard() || !q.is_standard() || !(p.shape == q.shape)) fail(out, "RSK output not standard for " + w.to_string());
      if (!(inverse_rsk(p, q) == w)) fail(out, "inverse RSK differs at " + w.to_string());
      seen.emplace(p.rows, q.rows);
    }
    if (seen.size() != factorial(n)) fail(out, "RSK not injective at n=" + std::to_string(n));
    if (n == 6) {
      rsk_pairs = seen.size();
      check_value(out, ex, "rsk.pairs.n6", std::to_string(rsk_pairs));
    }
  }
  out.detail += " " + std::to_string(shapes.size()) + " shapes, RSK n<=6 (" + std::to_string(rsk_pairs) + " pairs at n=6)";
  return out;
}

Outcome base_change_suite(const AcceptanceLimits& limits, const Expectations&) {
  Outcome out;
  const auto ranks = hecke_ranks(limits);
  if (ranks.empty()) {
    out.skipped = true;
    return out;
  }
  SplitMix64 rng(0x5eed0007);
  for (int i = 0; i < 10; ++i) {
    const int e = ranks[static_cast<std::size_t>(i) % ranks.size()];
    const Rat q(static_cast<long>(rng.uniform(2, 3)));
    const auto prim = primitive_idempotents(e, q);
    const auto& a = pick(rng, prim);
    const auto& b = pick(rng, prim);
    const FiberPoint fp = sample_in_s_point(BlockShape({e}), QParam::make(q, e), LinkageMode::WithinBlock, rng);
    const BaseChange r = base_change(a, b, e, q, centre_point_of(fp));
    if (!r.commutes())
      fail(out, "e=" + std::to_string(e) + " " + a.lambda.to_string() + "," + b.lambda.to_string() + ": " +
                    std::to_string(r.specialized) + " vs " + std::to_string(r.affine_first));
  }
  out.detail += " 10 configurations";
  return out;
}

Outcome foundation(const AcceptanceLimits& limits, const Expectations& ex) {
  Outcome out;
  const int cases = std::stoi(expected(ex, "foundation.cases"));
  if (cases < 200) fail(out, "fewer than 200 cases per suite");
  const int max_e = std::max(1, std::min(limits.max_e, 4));
  std::vector<std::string> done;
  auto suite = [&](const std::string& name, std::uint64_t seed, const std::function<bool(SplitMix64&)>& body) {
    SplitMix64 rng(seed);
    int bad = 0;
    for (int i = 0; i < cases; ++i)
      if (!body(rng)) ++bad;
    if (bad) fail(out, name + ": " + std::to_string(bad) + " failures");
    done.push_back(name);
  };

  const BlockShape three({3});
  suite("ring", 0x5eed0801, [&](SplitMix64& rng) {
    const auto vars = x_ranges(three, -2, 2);
    const LPoly a = random_poly(rng, vars, 4), b = random_poly(rng, vars, 4), c = random_poly(rng, vars, 4);
    return (a * b) * c == a * (b * c) && a * b == b * a && a * (b + c) == a * b + a * c && (a - a).is_zero() &&
           a * LPoly(1) == a && a + LPoly() == a;
  });

  const std::vector<BlockShape> shapes{BlockShape({2}), BlockShape({3}), BlockShape({2, 2}), BlockShape({1, 3})};
  suite("action", 0x5eed0802, [&](SplitMix64& rng) {
    const BlockShape& shape = pick(rng, shapes);
    const auto elems = group_elements(shape);
    const GroupElem& g = pick(rng, elems);
    const GroupElem& h = pick(rng, elems);
    const auto vars = x_ranges(shape, -1, 2);
    const LPoly a = random_poly(rng, vars, 3), b = random_poly(rng, vars, 3);
    return act(g * h, a) == act(g, act(h, a)) && act(GroupElem::identity(shape), a) == a &&
           act(g, a * b) == act(g, a) * act(g, b) && act(g, a + b) == act(g, a) + act(g, b);
  });

  std::vector<BlockShape> small;
  for (const auto& s : shapes)
    if (*std::max_element(s.sizes().begin(), s.sizes().end()) <= max_e) small.push_back(s);
  if (small.empty()) small.push_back(BlockShape({1}));
  suite("sym-roundtrip", 0x5eed0803, [&](SplitMix64& rng) {
    const BlockShape& shape = pick(rng, small);
    const SymCoords c{random_poly(rng, s_ranges(shape), 3)};
    if (!(to_sym_coords(shape, from_sym_coords(shape, c)) == c)) return false;
    const LPoly r = reynolds(shape, random_poly(rng, x_ranges(shape, 0, 2), 3));
    return from_sym_coords(shape, to_sym_coords(shape, r)) == r;
  });

  suite("artin-reconstruction", 0x5eed0804, [&](SplitMix64& rng) {
    const int e = static_cast<int>(rng.uniform(1, std::min(3, max_e)));
    const BlockShape shape({e});
    const LPoly p = random_poly(rng, x_ranges(shape, 0, 3), 4);
    LPoly back;
    for (const auto& [nu, c] : reduce_to_basis(p, e)) back += from_sym_coords(shape, c) * LPoly::monomial(nu.monomial());
    return back == p;
  });

  suite("fin-hecke", 0x5eed0805, [&](SplitMix64& rng) {
    const int e = static_cast<int>(rng.uniform(1, max_e));
    const Rat& q = pick(rng, q_pool());
    const FinHeckeElt a = random_fin(rng, e, q), b = random_fin(rng, e, q), c = random_fin(rng, e, q);
    const FinHeckeElt one = FinHeckeElt::one(e, q);
    return (a * b) * c == a * (b * c) && one * a == a && a * one == a && a * (b + c) == a * b + a * c;
  });

  const int aff_e = std::min(3, max_e);
  suite("aff-hecke", 0x5eed0806, [&](SplitMix64& rng) {
    const int e = static_cast<int>(rng.uniform(1, aff_e));
    const Rat& q = pick(rng, q_pool());
    const AffHeckeElt a = random_aff(rng, e, q), b = random_aff(rng, e, q), c = random_aff(rng, e, q);
    return (a * b) * c == a * (b * c);
  });

  suite("idempotent-rank", 0x5eed0807, [&](SplitMix64& rng) {
    const int e = static_cast<int>(rng.uniform(1, max_e));
    const Rat& q = pick(rng, q_pool());
    const auto parts = partitions_of(e);
    const Partition lambda = pick(rng, parts);
    const auto tableaux = standard_tableaux(lambda);
    const FinHeckeElt eps = tableau_idempotent(pick(rng, tableaux), q);
    return eps * eps == eps && rank(fin_left_matrix(eps)) == f_lambda(lambda);
  });

  std::string names;
  for (const auto& n : done) names += (names.empty() ? "" : ",") + n;
  out.detail += " " + std::to_string(cases) + " cases each: " + names;
  return out;
}

struct CriterionDef {
  const char* name;
  double budget;
  Outcome (*run)(const AcceptanceLimits&, const Expectations&);
};

const CriterionDef kCriteria[kCriteriaCount] = {
    {"discriminant power law", 15.0, discriminant_law},
    {"fiber splitting", 5.0, fiber_splitting},
    {"dense-set dichotomy", 30.0, dense_dichotomy},
    {"sandwich rank law", 180.0, rank_law},
    {"multiplicity-one ring isomorphism", 60.0, mult_one_isomorphism},
    {"multiplicity combinatorics", 30.0, combinatorics},
    {"base change", 60.0, base_change_suite},
    {"foundation properties", 60.0, foundation},
};

}  // namespace

Expectations default_expectations() {
  return {
      {"disc.e1", "c=1/1,k=0"},
      {"disc.e2", "c=1/1,k=1"},
      {"disc.e3", "c=1/1,k=3"},
      {"disc.e4", "c=1/1,k=12"},
      {"disc.delta.e2", "s_{1,1}^2 - 4*s_{2,1}"},
      {"fiber.orbit.(2)", "2"},
      {"fiber.orbit.(3)", "6"},
      {"fiber.orbit.(2,2)", "4"},
      {"fiber.orbit.(2,3)", "12"},
      {"simple.e2.in_s", "1,1,1"},
      {"simple.e3.in_s", "1,1,1"},
      {"simple.e2.linked.matrix_algebra", "0"},
      {"simple.e3.linked.matrix_algebra", "0"},
      {"rank.e2", "1,1;1,1"},
      {"rank.e3", "1,2,1;2,4,2;1,2,1"},
      {"unit.sandwich_dim", "1"},
      {"mult.sum.(3)", "6"},
      {"mult.count.(3)", "2"},
      {"mult.count.(2,3)", "4"},
      {"rsk.pairs.n6", "720"},
      {"foundation.cases", "200"},
  };
}

Expectations merge_expectations(Expectations base, const Expectations& overrides) {
  for (const auto& [k, v] : overrides) {
    auto it = base.find(k);
    if (it == base.end()) throw Error(Errc::InvalidInput, "unknown expectation key " + k);
    it->second = v;
  }
  return base;
}

CriterionResult run_criterion(int id, const AcceptanceLimits& limits, const Expectations& expect) {
  if (id < 1 || id > kCriteriaCount) throw Error(Errc::OutOfRange, "criterion " + std::to_string(id));
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = def.name;
  r.budget_seconds = def.budget;
  const auto t0 = Clock::now();
  try {
    Outcome o = def.run(limits, expect);
    r.pass = o.pass;
    r.skipped = o.skipped;
    r.detail = o.detail.empty() ? "" : o.detail.substr(1);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = since(t0);
  if (r.seconds > r.budget_seconds) {
    r.pass = false;
    r.detail += " [over budget]";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceLimits& limits, const Expectations& expect) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteriaCount; ++id) out.push_back(run_criterion(id, limits, expect));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " ("
     << fmt_seconds(r.seconds) << " / " << static_cast<int>(r.budget_seconds) << "s)";
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

std::vector<BlockShape> shapes_up_to(std::uint64_t max_group) {
  std::vector<std::vector<int>> multisets;
  std::vector<int> cur;
  std::function<void(int, std::uint64_t)> rec = [&](int max_part, std::uint64_t order) {
    if (!cur.empty()) multisets.push_back(cur);
    for (int e = max_part; e >= 2; --e) {
      const std::uint64_t next = order * factorial(e);
      if (next > max_group) continue;
      cur.push_back(e);
      rec(e, next);
      cur.pop_back();
    }
  };
  int top = 2;
  while (factorial(top + 1) <= max_group) ++top;
  rec(top, 1);
  std::sort(multisets.begin(), multisets.end());
  std::vector<BlockShape> out{BlockShape({1}), BlockShape({1, 1})};
  for (const auto& m : multisets)
    for (int ones = 0; ones <= 2; ++ones) {
      auto sizes = m;
      sizes.insert(sizes.end(), static_cast<std::size_t>(ones), 1);
      out.emplace_back(std::move(sizes));
    }
  return out;
}

}  // namespace hc
