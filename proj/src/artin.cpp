#include "heckecentre/artin.hpp"

#include <algorithm>

#include "heckecentre/error.hpp"
#include "heckecentre/linalg.hpp"

namespace hc {

Mono ArtinExponent::monomial(int block) const {
  std::vector<Mono::Entry> entries;
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] != 0) entries.emplace_back(VarId::x(static_cast<int>(i) + 1, block).code(), nu[i]);
  return Mono::from_entries(std::move(entries));
}

std::vector<ArtinExponent> artin_basis(int e) {
  if (e < 1) throw Error(Errc::OutOfRange, "artin basis needs e >= 1");
  std::vector<ArtinExponent> out;
  std::vector<int> nu(static_cast<std::size_t>(e), 0);
  while (true) {
    out.push_back({nu});
    int i = e - 1;
    while (i >= 0 && ++nu[i] > i) nu[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<Mono> tensor_artin_basis(const BlockShape& shape) {
  std::vector<Mono> out{Mono{}};
  for (int i = 1; i <= shape.blocks(); ++i) {
    std::vector<Mono> next;
    for (const auto& m : out)
      for (const auto& nu : artin_basis(shape.size(i))) next.push_back(m * nu.monomial(i));
    out = std::move(next);
  }
  return out;
}

namespace {

LPoly s_to_elem_sym(const LPoly& p, const BlockShape& shape) {
  return p.substitute([&](VarId v) -> std::optional<LPoly> {
    if (v.kind != VarKind::S) return std::nullopt;
    return elem_sym(shape, v.block, v.slot);
  });
}

}  // namespace

TowerRelations tower_polys(int e) {
  if (e < 1) throw Error(Errc::OutOfRange, "tower needs e >= 1");
  const BlockShape shape({e});
  TowerRelations tower;
  tower.e = e;
  tower.by_degree.resize(static_cast<std::size_t>(e));

  std::vector<LPoly> top(static_cast<std::size_t>(e) + 1);
  for (int k = 0; k <= e; ++k) {
    LPoly sk = k == 0 ? LPoly(1) : LPoly::var(VarId::s(k));
    top[e - k] = (k % 2 == 0) ? sk : -sk;
  }
  tower.by_degree[e - 1] = LUPoly(std::move(top));

  for (int j = e - 1; j >= 1; --j) {
    const LPoly root = LPoly::var(VarId::x(j + 1));
    auto [quot, rem] = up_divmod(tower.f(j + 1), LUPoly::linear_root(root));
    // The remainder is f_{j+1}(X_{j+1}), which must vanish in Z.
    if (!s_to_elem_sym(rem.coeff(0), shape).is_zero())
      throw Error(Errc::NotExact, "tower division f_" + std::to_string(j + 1) + " / (T - X_" + std::to_string(j + 1) + ")");
    tower.by_degree[j - 1] = std::move(quot);
  }

  for (int j = 1; j <= e; ++j) {
    const LPoly value = tower.f(j).eval(LPoly::var(VarId::x(j)));
    if (!s_to_elem_sym(value, shape).is_zero())
      throw Error(Errc::NotExact, "f_" + std::to_string(j) + "(X_" + std::to_string(j) + ") != 0");
  }
  return tower;
}

ArtinReducer::ArtinReducer(int e) : e_(e), basis_(artin_basis(e)), tower_(tower_polys(e)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::vector<LPoly> ArtinReducer::reduce_polynomial(const LPoly& p) const {
  for (VarId v : p.variables()) {
    if (v.block != 1 || v.slot > e_)
      throw Error(Errc::ShapeMismatch, v.to_string() + " is not a variable of the block of size " + std::to_string(e_));
    if (v.kind == VarKind::X && p.min_exponent(v) < 0)
      throw Error(Errc::NegativeExponentInput, v.to_string() + " has a negative exponent");
  }
  LPoly cur = p;
  for (int j = 1; j <= e_; ++j) {
    const VarId xj = VarId::x(j);
    if (cur.max_exponent(xj) < j) continue;
    const LUPoly as_poly = to_upoly(cur, xj);
    cur = from_upoly(up_divmod(as_poly, tower_.f(j)).remainder, xj);
  }
  std::vector<std::vector<Term>> buckets(basis_.size());
  for (const auto& t : cur.terms()) {
    ArtinExponent nu{std::vector<int>(static_cast<std::size_t>(e_), 0)};
    std::vector<Mono::Entry> s_part;
    for (const auto& [code, exp] : t.mono.entries()) {
      const VarId v = VarId::from_code(code);
      if (v.kind == VarKind::X)
        nu.nu[v.slot - 1] = exp;
      else
        s_part.emplace_back(code, exp);
    }
    auto it = index_.find(nu);
    if (it == index_.end()) throw Error(Errc::NotExact, "reduction left a non-basis monomial");
    buckets[it->second].push_back({Mono::from_entries(std::move(s_part)), t.coeff});
  }
  std::vector<LPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(LPoly::from_terms(std::move(b)));
  return out;
}

const std::vector<LPoly>& ArtinReducer::reduce_exponent(const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != e_) throw Error(Errc::SizeMismatch, "exponent length");
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  const int shift = std::max(0, -*std::min_element(a.begin(), a.end()));
  std::vector<Mono::Entry> entries;
  for (int i = 0; i < e_; ++i)
    if (a[i] + shift != 0) entries.emplace_back(VarId::x(i + 1).code(), a[i] + shift);
  std::vector<LPoly> coords = reduce_polynomial(LPoly::monomial(Mono::from_entries(std::move(entries))));
  if (shift > 0) {
    const Mono unshift = Mono::var(VarId::s(e_), -shift);
    for (auto& c : coords) c = c.mul_mono(unshift);
  }
  return cache_.emplace(a, std::move(coords)).first->second;
}

std::vector<LPoly> ArtinReducer::reduce(const LPoly& p) {
  std::vector<LPoly> out(basis_.size());
  for (const auto& t : p.terms()) {
    std::vector<int> a(static_cast<std::size_t>(e_), 0);
    std::vector<Mono::Entry> s_part;
    for (const auto& [code, exp] : t.mono.entries()) {
      const VarId v = VarId::from_code(code);
      if (v.block != 1 || v.slot > e_)
        throw Error(Errc::ShapeMismatch, v.to_string() + " is not a variable of the block of size " + std::to_string(e_));
      if (v.kind == VarKind::X)
        a[v.slot - 1] = exp;
      else
        s_part.emplace_back(code, exp);
    }
    const Mono s_mono = Mono::from_entries(std::move(s_part));
    const auto& coords = reduce_exponent(a);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!coords[i].is_zero()) out[i] += coords[i].mul_mono(s_mono, t.coeff);
  }
  return out;
}

const LPoly& ArtinReducer::trace_exponent(const std::vector<int>& a) {
  auto it = trace_cache_.find(a);
  if (it != trace_cache_.end()) return it->second;
  LPoly tr;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    std::vector<int> sum = a;
    for (int i = 0; i < e_; ++i) sum[i] += basis_[b].nu[i];
    tr += reduce_exponent(sum)[b];
  }
  return trace_cache_.emplace(a, std::move(tr)).first->second;
}

BasisCoords reduce_to_basis(const LPoly& p, int e) {
  if (p.has_negative_exponent()) throw Error(Errc::NegativeExponentInput, "reduce_to_basis expects a polynomial");
  ArtinReducer reducer(e);
  const auto coords = reducer.reduce(p);
  BasisCoords out;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out.emplace(reducer.basis()[i], SymCoords{coords[i]});
  return out;
}

namespace {

/// Arithmetic in R_j = S[X_{j+1}, ..., X_e] modulo f_{j+1}, ..., f_e:
/// elements are kept reduced (exponent of X_i below i for i > j).
class TowerLevel {
 public:
  TowerLevel(const TowerRelations& tower, int level) : tower_(tower), level_(level) {}

  LPoly reduce(LPoly p) const {
    for (int i = level_ + 1; i <= tower_.e; ++i) {
      const VarId xi = VarId::x(i);
      if (p.max_exponent(xi) < i) continue;
      p = from_upoly(up_divmod(to_upoly(p, xi), tower_.f(i)).remainder, xi);
    }
    return p;
  }
  LPoly mul(const LPoly& a, const LPoly& b) const { return reduce(a * b); }

 private:
  const TowerRelations& tower_;
  int level_;
};

/// Coordinates of x in R_{j-1} over R_j, basis X_j^0..X_j^{j-1}.
std::vector<LPoly> level_coords(const LPoly& x, int j) {
  const LUPoly u = to_upoly(x, VarId::x(j));
  std::vector<LPoly> out(static_cast<std::size_t>(j));
  for (int k = 0; k < j; ++k) out[k] = u.coeff(k);
  if (u.degree() >= j) throw Error(Errc::NotExact, "element not reduced at level " + std::to_string(j));
  return out;
}

/// Matrix of multiplication by x (an element of R_{j-1}) over R_j; column
/// k holds the coordinates of x * X_j^k.
std::vector<std::vector<LPoly>> level_mult_matrix(const LPoly& x, int j, const TowerLevel& upper) {
  std::vector<std::vector<LPoly>> m(static_cast<std::size_t>(j), std::vector<LPoly>(static_cast<std::size_t>(j)));
  for (int k = 0; k < j; ++k) {
    const auto coords = level_coords(upper.reduce(x.mul_mono(Mono::var(VarId::x(j), k))), j);
    for (int r = 0; r < j; ++r) m[r][k] = coords[r];
  }
  return m;
}

LPoly level_power(const LPoly& x, std::size_t n, const TowerLevel& ring) {
  LPoly result(1), base = x;
  while (n > 0) {
    if (n & 1U) result = ring.mul(result, base);
    n >>= 1U;
    if (n > 0) base = ring.mul(base, base);
  }
  return result;
}

/// Discriminant of R_0 over R_j, as a reduced element of R_j.
LPoly relative_discriminant(const TowerRelations& tower, int j) {
  if (j <= 1) return LPoly(1);
  const TowerLevel upper(tower, j - 1);  // R_{j-1}
  const TowerLevel base(tower, j);       // R_j
  auto mul = [&](const LPoly& a, const LPoly& b) { return base.mul(a, b); };

  // Trace form of R_{j-1}/R_j on X_j^0..X_j^{j-1}.
  std::vector<LPoly> traces(static_cast<std::size_t>(2 * j - 1));
  for (int a = 0; a <= 2 * j - 2; ++a) {
    const auto mult = level_mult_matrix(LPoly::var(VarId::x(j), a), j, upper);
    for (int k = 0; k < j; ++k) traces[a] += mult[k][k];
  }
  std::vector<std::vector<LPoly>> form(static_cast<std::size_t>(j), std::vector<LPoly>(static_cast<std::size_t>(j)));
  for (int a = 0; a < j; ++a)
    for (int b = 0; b < j; ++b) form[a][b] = traces[a + b];
  const LPoly level_disc = divfree_determinant(form, mul);

  const LPoly inner = relative_discriminant(tower, j - 1);
  const LPoly norm = divfree_determinant(level_mult_matrix(inner, j, upper), mul);
  return base.mul(level_power(level_disc, factorial(j - 1), base), norm);
}

}  // namespace

SymCoords tower_discriminant(int e) {
  const TowerRelations tower = tower_polys(e);
  return SymCoords{relative_discriminant(tower, e)};
}

TraceForm trace_form(int e, DeterminantMethod method) {
  if (method == DeterminantMethod::Auto) method = e <= 3 ? DeterminantMethod::Bareiss : DeterminantMethod::Tower;
  ArtinReducer reducer(e);
  const auto& basis = reducer.basis();
  const std::size_t n = basis.size();
  TraceForm out;
  out.basis = basis;
  out.method = method;
  out.entries.assign(n, std::vector<SymCoords>(n));
  std::vector<std::vector<LPoly>> matrix(n, std::vector<LPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::vector<int> a(static_cast<std::size_t>(e));
      for (int k = 0; k < e; ++k) a[k] = basis[i].nu[k] + basis[j].nu[k];
      matrix[i][j] = matrix[j][i] = reducer.trace_exponent(a);
      out.entries[i][j] = out.entries[j][i] = SymCoords{matrix[i][j]};
    }
  }
  out.delta = method == DeterminantMethod::Bareiss ? SymCoords{bareiss_determinant(std::move(matrix))}
                                                   : SymCoords{relative_discriminant(reducer.tower(), e)};
  return out;
}

SymCoords discriminant_d(int e) {
  if (e < 1) throw Error(Errc::OutOfRange, "e >= 1");
  LPoly d(1);
  for (int i = 1; i <= e; ++i)
    for (int j = i + 1; j <= e; ++j) {
      const LPoly diff = LPoly::var(VarId::x(i)) - LPoly::var(VarId::x(j));
      d = d * diff * diff;
    }
  return to_sym_coords(BlockShape({e}), d);
}

DiscPower disc_power_check(int e) { return disc_power_check(e, trace_form(e).delta); }

DiscPower disc_power_check(int e, const SymCoords& delta) {
  DiscPower out;
  out.delta = delta;
  out.d = discriminant_d(e);
  LPoly rest = delta.value;
  if (out.d.value.is_constant()) {
    // e = 1: d is the empty product.
    if (!rest.is_constant() || rest.is_zero()) throw Error(Errc::NotAPower, "Delta = " + rest.to_string());
    out.c = rest.constant_term() / out.d.value.constant_term();
    out.k = 0;
    return out;
  }
  while (!rest.is_constant()) {
    auto [q, r] = lp_divmod(rest, out.d.value);
    if (!r.is_zero()) throw Error(Errc::NotAPower, "d does not divide " + rest.to_string());
    rest = std::move(q);
    ++out.k;
  }
  if (rest.is_zero()) throw Error(Errc::NotAPower, "Delta vanishes identically");
  out.c = rest.constant_term();
  return out;
}

}  // namespace hc
