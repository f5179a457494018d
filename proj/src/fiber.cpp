#include "heckecentre/fiber.hpp"

#include "heckecentre/artin.hpp"
#include "heckecentre/error.hpp"
#include "heckecentre/linalg.hpp"

namespace hc {

namespace {

BlockShape shape_of(const std::vector<std::vector<Rat>>& blocks) {
  std::vector<int> sizes;
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  return BlockShape(std::move(sizes));
}

}  // namespace

BlockShape CentrePoint::shape() const { return shape_of(a); }
BlockShape FiberPoint::shape() const { return shape_of(roots); }

Assignment CentrePoint::assignment() const {
  Assignment out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a[i].size(); ++k)
      out.emplace(VarId::s(static_cast<int>(k) + 1, static_cast<int>(i) + 1), a[i][k]);
  return out;
}

Assignment FiberPoint::assignment() const {
  Assignment out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t k = 0; k < roots[i].size(); ++k)
      out.emplace(VarId::x(static_cast<int>(k) + 1, static_cast<int>(i) + 1), roots[i][k]);
  return out;
}

void validate(const FiberPoint& fp) {
  (void)fp.shape();
  for (const auto& block : fp.roots)
    for (const auto& r : block)
      if (r == 0) throw Error(Errc::ZeroRoot, "roots must be nonzero");
}

void validate(const CentrePoint& m) {
  (void)m.shape();
  for (const auto& block : m.a)
    if (block.back() == 0) throw Error(Errc::ZeroConstantTerm, "top coordinate s_e must be nonzero");
}

Rat q_integer(int k, const Rat& q) {
  Rat sum = 0, power = 1;
  for (int j = 0; j < k; ++j) {
    sum += power;
    power *= q;
  }
  return sum;
}

QParam QParam::make(const Rat& q, int max_e) {
  if (q == 0 || q == 1 || q == -1)
    throw Error(Errc::DegenerateParameter, "q = " + rat_to_string(q) + " is excluded");
  for (int k = 2; k <= max_e; ++k)
    if (q_integer(k, q) == 0) throw Error(Errc::DegenerateParameter, "[" + std::to_string(k) + "]_q = 0");
  return QParam{q};
}

std::string DenseSetVerdict::kind_name() const {
  switch (kind) {
    case Kind::InS: return "InS";
    case Kind::NotRegular: return "NotRegular";
    case Kind::Linked: return "Linked";
  }
  return "?";
}

RatUPoly char_poly(const std::vector<Rat>& a) {
  if (a.empty()) throw Error(Errc::InvalidInput, "empty coordinate list");
  if (a.back() == 0) throw Error(Errc::ZeroConstantTerm, "a_e = 0");
  const std::size_t e = a.size();
  std::vector<Rat> c(e + 1);
  c[e] = 1;
  for (std::size_t k = 1; k <= e; ++k) c[e - k] = (k % 2 == 0) ? a[k - 1] : Rat(-a[k - 1]);
  return RatUPoly(std::move(c));
}

CentrePoint centre_point_of(const FiberPoint& fp) {
  validate(fp);
  CentrePoint m;
  for (const auto& block : fp.roots) {
    // Coefficients of prod (1 + alpha t) are the elementary symmetric values.
    std::vector<Rat> e_vals{Rat(1)};
    for (const auto& alpha : block) {
      std::vector<Rat> next(e_vals.size() + 1, Rat(0));
      for (std::size_t d = 0; d < e_vals.size(); ++d) {
        next[d] += e_vals[d];
        next[d + 1] += e_vals[d] * alpha;
      }
      e_vals = std::move(next);
    }
    m.a.emplace_back(e_vals.begin() + 1, e_vals.end());
  }
  return m;
}

bool is_regular(const CentrePoint& m) {
  validate(m);
  for (const auto& block : m.a) {
    const RatUPoly f = char_poly(block);
    if (up_gcd(f, f.derivative()).degree() > 0) return false;
  }
  return true;
}

DenseSetVerdict in_dense_set(const FiberPoint& fp, const QParam& q, LinkageMode mode) {
  validate(fp);
  DenseSetVerdict v;
  const auto& r = fp.roots;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t k = 0; k < r[i].size(); ++k)
      for (std::size_t k2 = k + 1; k2 < r[i].size(); ++k2)
        if (r[i][k] == r[i][k2]) {
          v.kind = DenseSetVerdict::Kind::NotRegular;
          v.first = {static_cast<int>(k) + 1, static_cast<int>(i) + 1};
          v.second = {static_cast<int>(k2) + 1, static_cast<int>(i) + 1};
          v.ratio = 1;
          return v;
        }
  const Rat q_inv = Rat(1) / q.q;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t k = 0; k < r[i].size(); ++k)
      for (std::size_t i2 = 0; i2 < r.size(); ++i2) {
        if (mode == LinkageMode::WithinBlock && i2 != i) continue;
        for (std::size_t k2 = 0; k2 < r[i2].size(); ++k2) {
          if (i2 == i && k2 == k) continue;
          Rat ratio = r[i2][k2] / r[i][k];
          if (ratio == q.q || ratio == q_inv) {
            v.kind = DenseSetVerdict::Kind::Linked;
            v.first = {static_cast<int>(k) + 1, static_cast<int>(i) + 1};
            v.second = {static_cast<int>(k2) + 1, static_cast<int>(i2) + 1};
            v.ratio = ratio;
            return v;
          }
        }
      }
  return v;
}

std::vector<FiberPoint> fiber_orbit(const FiberPoint& fp) {
  validate(fp);
  std::vector<FiberPoint> out;
  for (const auto& g : group_elements(fp.shape())) {
    FiberPoint p;
    for (std::size_t i = 0; i < fp.roots.size(); ++i) {
      const Perm& w = g.parts()[i];
      std::vector<Rat> block(fp.roots[i].size());
      for (int k = 0; k < w.size(); ++k) block[k] = fp.roots[i][w(k)];
      p.roots.push_back(std::move(block));
    }
    out.push_back(std::move(p));
  }
  return out;
}

SplitVerdict split_check(const FiberPoint& fp) {
  const auto orbit = fiber_orbit(fp);
  const auto basis = tensor_artin_basis(fp.shape());
  RatMatrix m(orbit.size(), basis.size());
  for (std::size_t r = 0; r < orbit.size(); ++r) {
    const Assignment at = orbit[r].assignment();
    for (std::size_t c = 0; c < basis.size(); ++c) m(r, c) = lp_eval(LPoly::monomial(basis[c]), at);
  }
  SplitVerdict v;
  v.dim = basis.size();
  v.det = determinant(std::move(m));
  v.split = v.det != 0;
  return v;
}

FiberPoint lift_to_fiber(const CentrePoint& m) {
  validate(m);
  FiberPoint fp;
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    auto rr = rational_roots(char_poly(m.a[i]));
    if (rr.residual.degree() > 0)
      throw Error(Errc::IrrationalRoots, "block " + std::to_string(i + 1) + " leaves factor " + rr.residual.to_string("X"));
    fp.roots.push_back(std::move(rr.roots));
  }
  return fp;
}

}  // namespace hc
