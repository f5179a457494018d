#include "heckecentre/hecke.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "heckecentre/error.hpp"

namespace hc {

namespace {

struct PermTable {
  std::size_t n = 0;
  std::vector<Perm> perms;
  std::vector<int> length;
  std::vector<std::vector<int>> words;
  // left[i][r] = rank(s_i w_r), right[i][r] = rank(w_r s_i)
  std::vector<std::vector<std::size_t>> left, right;
};

const PermTable& perm_table(int e) {
  if (e < 1) throw Error(Errc::InvalidInput, "Hecke algebra rank must be >= 1");
  if (e > 7) throw Error(Errc::LimitExceeded, "Hecke algebra rank limited to 7");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PermTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[e];
  if (!slot) {
    auto t = std::make_unique<PermTable>();
    t->perms = all_perms(e);
    t->n = t->perms.size();
    for (const auto& w : t->perms) {
      t->length.push_back(w.length());
      t->words.push_back(w.reduced_word());
    }
    t->left.assign(static_cast<std::size_t>(e - 1), std::vector<std::size_t>(t->n));
    t->right = t->left;
    for (int i = 0; i + 1 < e; ++i) {
      const Perm s = Perm::simple(e, i);
      for (std::size_t r = 0; r < t->n; ++r) {
        t->left[i][r] = perm_rank(s * t->perms[r]);
        t->right[i][r] = perm_rank(t->perms[r] * s);
      }
    }
    slot = std::move(t);
  }
  return *slot;
}

void check_params(int e1, const Rat& q1, int e2, const Rat& q2) {
  if (e1 != e2 || q1 != q2) throw Error(Errc::ParameterMismatch, "Hecke elements with different (e, q)");
}

// out += T_{s_i} (c T_r)
template <class C>
void add_simple_left(const PermTable& t, int i, std::size_t r, const C& c, const Rat& q, const Rat& qm1,
                     std::vector<C>& out) {
  const std::size_t s = t.left[i][r];
  if (t.length[s] > t.length[r]) {
    out[s] += c;
  } else {
    out[r] += c * qm1;
    out[s] += c * q;
  }
}

std::vector<Rat> fin_left_word(const PermTable& t, const std::vector<int>& word, std::vector<Rat> cur, const Rat& q) {
  const Rat qm1 = q - 1;
  for (std::size_t idx = word.size(); idx-- > 0;) {
    std::vector<Rat> next(t.n, Rat(0));
    for (std::size_t r = 0; r < t.n; ++r)
      if (cur[r] != 0) add_simple_left(t, word[idx], r, cur[r], q, qm1, next);
    cur = std::move(next);
  }
  return cur;
}

VarId xv(int slot) { return VarId::x(slot, 1); }

/// P with X_{i+1} and X_{i+2} exchanged (i 0-based).
LPoly swap_slots(const LPoly& p, int i) {
  return p.rename([i](VarId v) {
    if (v.kind == VarKind::X && v.block == 1) {
      if (v.slot == i + 1) return xv(i + 2);
      if (v.slot == i + 2) return xv(i + 1);
    }
    return v;
  });
}

/// (P - s_i P) / (1 - X_i^{-1} X_{i+1}) as a finite geometric sum.
LPoly geometric_part(const LPoly& p, int i) {
  std::vector<Term> terms;
  const Mono y = Mono::var(xv(i + 1), -1) * Mono::var(xv(i + 2), 1);
  const Mono y_inv = y.inverse();
  for (const auto& t : p.terms()) {
    const int n = t.mono.exponent(xv(i + 1)) - t.mono.exponent(xv(i + 2));
    if (n > 0) {
      Mono m = t.mono;
      for (int j = 0; j < n; ++j) {
        terms.push_back({m, t.coeff});
        m = m * y;
      }
    } else if (n < 0) {
      Mono m = t.mono * y_inv;
      for (int j = -1; j >= n; --j) {
        terms.push_back({m, -t.coeff});
        m = m * y_inv;
      }
    }
  }
  return LPoly::from_terms(std::move(terms));
}

std::vector<LPoly> aff_left_simple(const PermTable& t, int i, const std::vector<LPoly>& cur, const Rat& q) {
  const Rat qm1 = q - 1;
  std::vector<LPoly> next(t.n);
  for (std::size_t r = 0; r < t.n; ++r) {
    if (cur[r].is_zero()) continue;
    add_simple_left(t, i, r, swap_slots(cur[r], i), q, qm1, next);
    next[r] += geometric_part(cur[r], i) * qm1;
  }
  return next;
}

std::vector<LPoly> aff_left_word(const PermTable& t, const std::vector<int>& word, std::vector<LPoly> cur, const Rat& q) {
  for (std::size_t idx = word.size(); idx-- > 0;) cur = aff_left_simple(t, word[idx], cur, q);
  return cur;
}

void check_x_poly(int e, const LPoly& p) {
  for (const VarId& v : p.variables())
    if (v.kind != VarKind::X || v.block != 1 || v.slot < 1 || v.slot > e)
      throw Error(Errc::InvalidInput, "affine coefficient uses " + v.to_string() + " outside X_{1.." + std::to_string(e) + ",1}");
}

Mono x_mono(const std::vector<int>& a) {
  std::vector<Mono::Entry> entries;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0) entries.emplace_back(xv(static_cast<int>(k) + 1).code(), a[k]);
  return Mono::from_entries(std::move(entries));
}

std::string term_list(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " + ";
    out += parts[i];
  }
  return out;
}

/// Dense coordinates of an affine element in the specialized basis.
std::vector<Rat> affine_coords(const AffHeckeElt& a, ArtinReducer& red, const Assignment& at) {
  const std::size_t n = a.coeffs.size();
  std::vector<Rat> out(red.basis().size() * n, Rat(0));
  for (std::size_t v = 0; v < n; ++v) {
    if (a.coeffs[v].is_zero()) continue;
    const auto coords = red.reduce(a.coeffs[v]);
    for (std::size_t b = 0; b < coords.size(); ++b)
      if (!coords[b].is_zero()) out[b * n + v] += lp_eval(coords[b], at);
  }
  return out;
}

std::vector<Rat> kron_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() * b.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

bool any_nonzero(const std::vector<Rat>& v) {
  for (const auto& x : v)
    if (x != 0) return true;
  return false;
}

}  // namespace

// ---- finite algebra ----

FinHeckeElt FinHeckeElt::zero(int e, const Rat& q) {
  return FinHeckeElt{e, q, std::vector<Rat>(perm_table(e).n, Rat(0))};
}

FinHeckeElt FinHeckeElt::one(int e, const Rat& q) {
  FinHeckeElt f = zero(e, q);
  f.coeffs[0] = 1;
  return f;
}

FinHeckeElt FinHeckeElt::basis(const Perm& w, const Rat& q) {
  FinHeckeElt f = zero(w.size(), q);
  f.coeffs[perm_rank(w)] = 1;
  return f;
}

FinHeckeElt FinHeckeElt::generator(int e, const Rat& q, int i) {
  if (i < 1 || i >= e) throw Error(Errc::OutOfRange, "generator index " + std::to_string(i) + " for e = " + std::to_string(e));
  return basis(Perm::simple(e, i - 1), q);
}

const Rat& FinHeckeElt::coeff(const Perm& w) const {
  if (w.size() != e) throw Error(Errc::SizeMismatch, "permutation size differs from e");
  return coeffs[perm_rank(w)];
}

bool FinHeckeElt::is_zero() const { return !any_nonzero(coeffs); }

std::string FinHeckeElt::to_string() const {
  const auto& t = perm_table(e);
  std::vector<std::string> parts;
  for (std::size_t r = 0; r < coeffs.size(); ++r)
    if (coeffs[r] != 0) parts.push_back(rat_to_string(coeffs[r]) + "*T" + t.perms[r].to_string());
  return term_list(parts);
}

FinHeckeElt& FinHeckeElt::operator+=(const FinHeckeElt& o) {
  check_params(e, q, o.e, o.q);
  for (std::size_t r = 0; r < coeffs.size(); ++r) coeffs[r] += o.coeffs[r];
  return *this;
}

FinHeckeElt& FinHeckeElt::operator-=(const FinHeckeElt& o) {
  check_params(e, q, o.e, o.q);
  for (std::size_t r = 0; r < coeffs.size(); ++r) coeffs[r] -= o.coeffs[r];
  return *this;
}

FinHeckeElt& FinHeckeElt::operator*=(const Rat& c) {
  for (auto& x : coeffs) x *= c;
  return *this;
}

FinHeckeElt fin_mul(const FinHeckeElt& a, const FinHeckeElt& b) {
  check_params(a.e, a.q, b.e, b.q);
  const auto& t = perm_table(a.e);
  FinHeckeElt out = FinHeckeElt::zero(a.e, a.q);
  for (std::size_t u = 0; u < t.n; ++u) {
    if (a.coeffs[u] == 0) continue;
    const auto prod = fin_left_word(t, t.words[u], b.coeffs, a.q);
    for (std::size_t r = 0; r < t.n; ++r)
      if (prod[r] != 0) out.coeffs[r] += a.coeffs[u] * prod[r];
  }
  return out;
}

RatMatrix fin_left_matrix(const FinHeckeElt& a) {
  const auto& t = perm_table(a.e);
  RatMatrix m(t.n, t.n);
  for (std::size_t w = 0; w < t.n; ++w) {
    const auto col = fin_mul(a, FinHeckeElt::basis(t.perms[w], a.q));
    for (std::size_t r = 0; r < t.n; ++r) m(r, w) = col.coeffs[r];
  }
  return m;
}

FinHeckeElt jucys_murphy(int e, const Rat& q, int k) {
  if (k < 1 || k > e) throw Error(Errc::OutOfRange, "Jucys-Murphy index " + std::to_string(k));
  FinHeckeElt l = FinHeckeElt::one(e, q);
  const Rat q_inv = Rat(1) / q;
  for (int j = 1; j < k; ++j) {
    const FinHeckeElt t = FinHeckeElt::generator(e, q, j);
    l = t * l * t * q_inv;
  }
  return l;
}

FinHeckeElt tableau_idempotent(const Tableau& t, const Rat& q) {
  if (!t.is_standard()) throw Error(Errc::InvalidInput, "tableau is not standard: " + t.to_string());
  const int e = t.size();
  (void)QParam::make(q, e);
  const FinHeckeElt one = FinHeckeElt::one(e, q);
  FinHeckeElt f = one;
  for (int k = 2; k <= e; ++k) {
    const FinHeckeElt l = jucys_murphy(e, q, k);
    const Rat target = rat_pow(q, t.content_of(k));
    for (int c = -(k - 1); c <= k - 1; ++c) {
      if (c == t.content_of(k)) continue;
      const Rat qc = rat_pow(q, c);
      f = f * (l - one * qc) * Rat(Rat(1) / (target - qc));
    }
  }
  return f;
}

std::vector<IdempotentTag> primitive_idempotents(int e, const Rat& q) {
  (void)QParam::make(q, e);
  std::vector<IdempotentTag> out;
  for (const auto& lambda : partitions_of(e))
    out.push_back({lambda, tableau_idempotent(standard_tableaux(lambda).front(), q), IdempotentTag::Kind::Primitive});
  return out;
}

std::vector<IdempotentTag> central_idempotents(int e, const Rat& q) {
  (void)QParam::make(q, e);
  std::vector<IdempotentTag> out;
  for (const auto& lambda : partitions_of(e)) {
    FinHeckeElt sum = FinHeckeElt::zero(e, q);
    for (const auto& t : standard_tableaux(lambda)) sum += tableau_idempotent(t, q);
    out.push_back({lambda, std::move(sum), IdempotentTag::Kind::CentralIsotypic});
  }
  return out;
}

// ---- affine algebra ----

AffHeckeElt AffHeckeElt::zero(int e, const Rat& q) { return AffHeckeElt{e, q, std::vector<LPoly>(perm_table(e).n)}; }

AffHeckeElt AffHeckeElt::one(int e, const Rat& q) {
  AffHeckeElt a = zero(e, q);
  a.coeffs[0] = LPoly(1);
  return a;
}

AffHeckeElt AffHeckeElt::x_power(const std::vector<int>& a, const Rat& q) {
  AffHeckeElt out = zero(static_cast<int>(a.size()), q);
  out.coeffs[0] = LPoly::monomial(x_mono(a));
  return out;
}

AffHeckeElt AffHeckeElt::from_poly(int e, const Rat& q, const LPoly& p) {
  check_x_poly(e, p);
  AffHeckeElt out = zero(e, q);
  out.coeffs[0] = p;
  return out;
}

AffHeckeElt AffHeckeElt::from_fin(const FinHeckeElt& f) {
  AffHeckeElt out = zero(f.e, f.q);
  for (std::size_t r = 0; r < f.coeffs.size(); ++r) out.coeffs[r] = LPoly(f.coeffs[r]);
  return out;
}

AffHeckeElt AffHeckeElt::basis(const std::vector<int>& a, const Perm& w, const Rat& q) {
  if (static_cast<int>(a.size()) != w.size()) throw Error(Errc::SizeMismatch, "exponent and permutation sizes differ");
  AffHeckeElt out = zero(w.size(), q);
  out.coeffs[perm_rank(w)] = LPoly::monomial(x_mono(a));
  return out;
}

bool AffHeckeElt::is_zero() const {
  for (const auto& p : coeffs)
    if (!p.is_zero()) return false;
  return true;
}

std::string AffHeckeElt::to_string() const {
  const auto& t = perm_table(e);
  std::vector<std::string> parts;
  for (std::size_t r = 0; r < coeffs.size(); ++r)
    if (!coeffs[r].is_zero()) parts.push_back("(" + coeffs[r].to_string() + ")*T" + t.perms[r].to_string());
  return term_list(parts);
}

AffHeckeElt& AffHeckeElt::operator+=(const AffHeckeElt& o) {
  check_params(e, q, o.e, o.q);
  for (std::size_t r = 0; r < coeffs.size(); ++r) coeffs[r] += o.coeffs[r];
  return *this;
}

AffHeckeElt& AffHeckeElt::operator-=(const AffHeckeElt& o) {
  check_params(e, q, o.e, o.q);
  for (std::size_t r = 0; r < coeffs.size(); ++r) coeffs[r] -= o.coeffs[r];
  return *this;
}

AffHeckeElt& AffHeckeElt::operator*=(const Rat& c) {
  for (auto& p : coeffs) p *= c;
  return *this;
}

AffHeckeElt aff_mul(const AffHeckeElt& a, const AffHeckeElt& b) {
  check_params(a.e, a.q, b.e, b.q);
  const auto& t = perm_table(a.e);
  AffHeckeElt out = AffHeckeElt::zero(a.e, a.q);
  for (std::size_t u = 0; u < t.n; ++u) {
    if (a.coeffs[u].is_zero()) continue;
    const auto prod = aff_left_word(t, t.words[u], b.coeffs, a.q);
    for (std::size_t r = 0; r < t.n; ++r)
      if (!prod[r].is_zero()) out.coeffs[r] += a.coeffs[u] * prod[r];
  }
  return out;
}

AffHeckeElt t_times_x(int i, const std::vector<int>& a, const Rat& q) {
  const int e = static_cast<int>(a.size());
  if (i < 1 || i >= e) throw Error(Errc::OutOfRange, "generator index " + std::to_string(i));
  AffHeckeElt x = AffHeckeElt::x_power(a, q);
  x.coeffs = aff_left_simple(perm_table(e), i - 1, x.coeffs, q);
  return x;
}

bool centre_check(const LPoly& p, int e, const Rat& q) {
  const AffHeckeElt z = AffHeckeElt::from_poly(e, q, p);
  for (int i = 1; i < e; ++i) {
    const AffHeckeElt t = AffHeckeElt::from_fin(FinHeckeElt::generator(e, q, i));
    if (!(t * z == z * t)) return false;
  }
  for (int j = 0; j < e; ++j)
    for (int sign : {1, -1}) {
      std::vector<int> a(static_cast<std::size_t>(e), 0);
      a[j] = sign;
      const AffHeckeElt x = AffHeckeElt::x_power(a, q);
      if (!(x * z == z * x)) return false;
    }
  return true;
}

bool centre_check(const SymCoords& c, int e, const Rat& q) {
  return centre_check(from_sym_coords(BlockShape({e}), c), e, q);
}

// ---- specialization ----

SymbolicStructure::SymbolicStructure(int e, Rat q) : e_(e), q_(std::move(q)) {
  const auto& t = perm_table(e);
  ArtinReducer red(e);
  const auto& basis = red.basis();
  const std::size_t n = t.n, nb = basis.size();
  dim_ = nb * n;

  // T_u X^mu for every u and Artin exponent mu.
  std::vector<std::vector<std::vector<LPoly>>> tx(n, std::vector<std::vector<LPoly>>(nb));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t mu = 0; mu < nb; ++mu)
      tx[u][mu] = aff_left_word(t, t.words[u], AffHeckeElt::x_power(basis[mu].nu, q_).coeffs, q_);

  std::vector<std::vector<Rat>> fin(n * n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      std::vector<Rat> bw(n, Rat(0));
      bw[w] = 1;
      fin[v * n + w] = fin_left_word(t, t.words[v], std::move(bw), q_);
    }

  std::vector<LPoly> acc(dim_);
  std::vector<std::vector<LPoly>> coords(n);
  for (std::size_t nu = 0; nu < nb; ++nu) {
    const Mono x_nu = basis[nu].monomial();
    for (std::size_t u = 0; u < n; ++u) {
      const std::size_t i = nu * n + u;
      for (std::size_t mu = 0; mu < nb; ++mu) {
        // X^nu T_u X^mu = sum_v X^nu P_v T_v, then rewrite X^nu P_v.
        for (std::size_t v = 0; v < n; ++v)
          coords[v] = tx[u][mu][v].is_zero() ? std::vector<LPoly>() : red.reduce(tx[u][mu][v].mul_mono(x_nu));
        for (std::size_t w = 0; w < n; ++w) {
          const std::size_t j = mu * n + w;
          for (std::size_t v = 0; v < n; ++v) {
            if (coords[v].empty()) continue;
            const auto& fv = fin[v * n + w];
            for (std::size_t b = 0; b < nb; ++b) {
              if (coords[v][b].is_zero()) continue;
              for (std::size_t x = 0; x < n; ++x)
                if (fv[x] != 0) acc[b * n + x] += coords[v][b] * fv[x];
            }
          }
          for (std::size_t k = 0; k < dim_; ++k)
            if (!acc[k].is_zero()) {
              entries_.push_back({i, j, k, std::move(acc[k])});
              acc[k] = LPoly();
            }
        }
      }
    }
  }
}

std::shared_ptr<const SymbolicStructure> SymbolicStructure::get(int e, const Rat& q) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, std::shared_ptr<const SymbolicStructure>> cache;
  const auto key = std::make_pair(e, rat_to_string(q));
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::shared_ptr<const SymbolicStructure> built(new SymbolicStructure(e, q));
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(built)).first->second;
}

SpecAlgebra SpecAlgebra::specialize(int e, const Rat& q, const CentrePoint& m) {
  if (m.a.size() != 1 || static_cast<int>(m.a[0].size()) != e)
    throw Error(Errc::ShapeMismatch, "centre point does not have a single block of size " + std::to_string(e));
  validate(m);
  (void)QParam::make(q, e);
  const auto sym = SymbolicStructure::get(e, q);
  const auto& t = perm_table(e);
  const auto basis = artin_basis(e);
  const Assignment at = m.assignment();

  SpecAlgebra A;
  A.dim_ = sym->dim();
  A.q_ = q;
  A.shape_ = BlockShape({e});
  A.m_ = m;
  for (const auto& nu : basis)
    for (const auto& w : t.perms) A.labels_.emplace_back(nu, w);

  A.start_.assign(A.dim_ * A.dim_ + 1, 0);
  std::size_t row = 0;
  for (const auto& entry : sym->entries()) {
    const std::size_t r = entry.i * A.dim_ + entry.j;
    while (row < r) A.start_[++row] = A.entries_.size();
    Rat c = lp_eval(entry.c, at);
    if (c != 0) A.entries_.emplace_back(entry.k, std::move(c));
  }
  while (row < A.dim_ * A.dim_) A.start_[++row] = A.entries_.size();

  for (int i = 0; i + 1 < e; ++i) A.generators_.push_back(A.basis_vector(perm_rank(Perm::simple(e, i))));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    int total = 0;
    for (int x : basis[b].nu) total += x;
    if (total == 1) A.generators_.push_back(A.basis_vector(b * t.n));
  }
  return A;
}

SpecAlgebra SpecAlgebra::tensor(const SpecAlgebra& a, const SpecAlgebra& b) {
  if (a.q_ != b.q_) throw Error(Errc::ParameterMismatch, "tensor of algebras with different q");
  SpecAlgebra A;
  A.dim_ = a.dim_ * b.dim_;
  A.q_ = a.q_;
  std::vector<int> sizes = a.shape_.sizes();
  sizes.insert(sizes.end(), b.shape_.sizes().begin(), b.shape_.sizes().end());
  A.shape_ = BlockShape(std::move(sizes));
  A.m_ = a.m_;
  A.m_.a.insert(A.m_.a.end(), b.m_.a.begin(), b.m_.a.end());
  A.start_.reserve(A.dim_ * A.dim_ + 1);
  A.start_.push_back(0);
  for (std::size_t i1 = 0; i1 < a.dim_; ++i1)
    for (std::size_t i2 = 0; i2 < b.dim_; ++i2)
      for (std::size_t j1 = 0; j1 < a.dim_; ++j1) {
        const auto p1 = a.product(i1, j1);
        for (std::size_t j2 = 0; j2 < b.dim_; ++j2) {
          const auto p2 = b.product(i2, j2);
          for (const auto& [k1, c1] : p1)
            for (const auto& [k2, c2] : p2) A.entries_.emplace_back(k1 * b.dim_ + k2, c1 * c2);
          A.start_.push_back(A.entries_.size());
        }
      }
  const auto ua = a.unit(), ub = b.unit();
  for (const auto& g : a.generators_) A.generators_.push_back(kron_vec(g, ub));
  for (const auto& g : b.generators_) A.generators_.push_back(kron_vec(ua, g));
  return A;
}

SpecAlgebra SpecAlgebra::specialize(const BlockShape& shape, const Rat& q, const CentrePoint& m) {
  if (m.shape() != shape) throw Error(Errc::ShapeMismatch, "centre point shape " + m.shape().to_string() + " vs " + shape.to_string());
  std::optional<SpecAlgebra> acc;
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    SpecAlgebra block = specialize(shape.sizes()[i], q, CentrePoint{{m.a[i]}});
    acc = acc ? tensor(*acc, block) : std::move(block);
  }
  return std::move(*acc);
}

Rat SpecAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, c] : product(i, j))
    if (kk == k) return c;
  return Rat(0);
}

std::vector<Rat> SpecAlgebra::basis_vector(std::size_t i) const {
  std::vector<Rat> v(dim_, Rat(0));
  v.at(i) = 1;
  return v;
}

std::vector<Rat> SpecAlgebra::unit() const { return basis_vector(0); }

std::vector<Rat> SpecAlgebra::mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw Error(Errc::SizeMismatch, "vector length differs from algebra dimension");
  std::vector<Rat> out(dim_, Rat(0));
  Rat ab;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      ab = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

RatMatrix SpecAlgebra::left_matrix(const std::vector<Rat>& a) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product(i, j)) m(k, j) += a[i] * c;
  }
  return m;
}

RatMatrix SpecAlgebra::right_matrix(const std::vector<Rat>& b) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      for (const auto& [k, c] : product(i, j)) m(k, i) += b[j] * c;
    }
  return m;
}

std::vector<Rat> SpecAlgebra::embed(const FinHeckeElt& f) const {
  return embed(std::vector<FinHeckeElt>{f});
}

std::vector<Rat> SpecAlgebra::embed(const std::vector<FinHeckeElt>& per_block) const {
  if (static_cast<int>(per_block.size()) != shape_.blocks())
    throw Error(Errc::ShapeMismatch, "one finite element per block expected");
  std::vector<Rat> acc{Rat(1)};
  for (std::size_t i = 0; i < per_block.size(); ++i) {
    const auto& f = per_block[i];
    if (f.e != shape_.sizes()[i] || f.q != q_) throw Error(Errc::ParameterMismatch, "finite element does not match block");
    // The Artin exponent 0 comes first, so T_w sits at index perm_rank(w).
    std::vector<Rat> v(f.coeffs.size() * f.coeffs.size(), Rat(0));
    for (std::size_t r = 0; r < f.coeffs.size(); ++r) v[r] = f.coeffs[r];
    acc = kron_vec(acc, v);
  }
  return acc;
}

std::vector<Rat> SpecAlgebra::embed(const AffHeckeElt& a) const {
  if (shape_.blocks() != 1 || shape_.size(1) != a.e || a.q != q_)
    throw Error(Errc::ParameterMismatch, "affine element does not match the algebra");
  ArtinReducer red(a.e);
  return affine_coords(a, red, m_.assignment());
}

bool SpecAlgebra::is_associative() const {
  std::vector<Rat> lhs(dim_), rhs(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        std::fill(lhs.begin(), lhs.end(), Rat(0));
        std::fill(rhs.begin(), rhs.end(), Rat(0));
        for (const auto& [l, c] : product(i, j))
          for (const auto& [x, d] : product(l, k)) lhs[x] += c * d;
        for (const auto& [l, c] : product(j, k))
          for (const auto& [x, d] : product(i, l)) rhs[x] += c * d;
        if (lhs != rhs) return false;
      }
  return true;
}

std::size_t sandwich_dim(const std::vector<Rat>& e1, const std::vector<Rat>& e2, const SpecAlgebra& a) {
  return rank(a.left_matrix(e1) * a.right_matrix(e2));
}

std::size_t sandwich_dim(const IdempotentTag& e1, const IdempotentTag& e2, const SpecAlgebra& a) {
  return sandwich_dim(a.embed(e1.element), a.embed(e2.element), a);
}

SimpleVerdict simple_check(const SpecAlgebra& a) {
  const std::size_t n = a.dim();
  SimpleVerdict v;
  std::vector<std::vector<Rat>> rows;
  for (const auto& g : a.generators()) {
    const RatMatrix l = a.left_matrix(g), r = a.right_matrix(g);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rat> row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = l(k, c) - r(k, c);
      rows.push_back(std::move(row));
    }
  }
  v.centre_dim = n - span_rank(rows);

  std::vector<Rat> tr(n, Rat(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (const auto& [x, c] : a.product(k, l))
        if (x == l) tr[k] += c;
  RatMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(i, j)) form(i, j) += c * tr[k];
  v.semisimple = determinant(std::move(form)) != 0;
  const std::size_t w = a.shape().group_order();
  v.matrix_algebra = v.semisimple && v.centre_dim == 1 && n == w * w;
  return v;
}

bool unit_map_surjective(const IdempotentTag& e, const SpecAlgebra& a) {
  const auto v = a.embed(e.element);
  if (!any_nonzero(v)) return false;
  const RatMatrix m = a.left_matrix(v) * a.right_matrix(v);
  std::vector<std::vector<Rat>> span;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    std::vector<Rat> col(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) col[k] = m(k, j);
    span.push_back(std::move(col));
  }
  span.push_back(v);
  return span_rank(span) == 1;
}

BaseChange base_change(const IdempotentTag& e1, const IdempotentTag& e2, int e, const Rat& q, const CentrePoint& m) {
  const SpecAlgebra A = SpecAlgebra::specialize(e, q, m);
  BaseChange r;
  r.specialized = sandwich_dim(e1, e2, A);
  const AffHeckeElt left = AffHeckeElt::from_fin(e1.element);
  const AffHeckeElt right = AffHeckeElt::from_fin(e2.element);
  ArtinReducer red(e);
  const Assignment at = m.assignment();
  std::vector<std::vector<Rat>> vecs;
  for (const auto& [nu, w] : A.labels())
    vecs.push_back(affine_coords(left * AffHeckeElt::basis(nu.nu, w, q) * right, red, at));
  r.affine_first = span_rank(vecs);
  return r;
}

bool base_change_commutes(const IdempotentTag& e1, const IdempotentTag& e2, int e, const Rat& q, const CentrePoint& m) {
  return base_change(e1, e2, e, q, m).commutes();
}

}  // namespace hc
