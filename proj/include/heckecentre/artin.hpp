#pragma once

#include <map>
#include <memory>
#include <vector>

#include "heckecentre/lpoly.hpp"
#include "heckecentre/symmetric.hpp"
#include "heckecentre/upoly.hpp"

namespace hc {

/// Exponent vector nu with 0 <= nu(i) < i (so nu(1) = 0).
struct ArtinExponent {
  std::vector<int> nu;

  Mono monomial(int block = 1) const;
  friend auto operator<=>(const ArtinExponent&, const ArtinExponent&) = default;
  friend bool operator==(const ArtinExponent&, const ArtinExponent&) = default;
};

/// The e! Artin exponents in lexicographic order on nu.
std::vector<ArtinExponent> artin_basis(int e);

/// Tensor product of per-block Artin bases as X-monomials; block 1 varies
/// slowest.
std::vector<Mono> tensor_artin_basis(const BlockShape& shape);

/// Tower relations f_e, ..., f_1 for a single block of size e. f_j is monic
/// of degree j in T, with coefficients in s_{k,1} and X_{j+1..e,1}, and
/// vanishes at T = X_j once s_k is read as the elementary symmetric function.
struct TowerRelations {
  int e = 0;
  /// by_degree[j-1] = f_j.
  std::vector<LUPoly> by_degree;

  const LUPoly& f(int j) const { return by_degree.at(static_cast<std::size_t>(j - 1)); }
};

TowerRelations tower_polys(int e);

using BasisCoords = std::map<ArtinExponent, SymCoords>;

/// Coordinates of a polynomial in X_{1..e,1} (coefficients may involve
/// s_{k,1}) in the Artin basis over the symmetric subring. Throws
/// NegativeExponentInput for Laurent input.
BasisCoords reduce_to_basis(const LPoly& p, int e);

/// Memoizing reducer; dense coordinates indexed like artin_basis(e).
/// Accepts Laurent input by pulling out powers of s_e.
class ArtinReducer {
 public:
  explicit ArtinReducer(int e);

  int e() const noexcept { return e_; }
  const std::vector<ArtinExponent>& basis() const noexcept { return basis_; }
  const TowerRelations& tower() const noexcept { return tower_; }

  /// Dense coordinates of the monomial X^a, a in Z^e.
  const std::vector<LPoly>& reduce_exponent(const std::vector<int>& a);
  std::vector<LPoly> reduce(const LPoly& p);

  /// Trace of multiplication by X^a on the free module.
  const LPoly& trace_exponent(const std::vector<int>& a);

 private:
  std::vector<LPoly> reduce_polynomial(const LPoly& p) const;

  int e_;
  std::vector<ArtinExponent> basis_;
  std::map<ArtinExponent, std::size_t> index_;
  TowerRelations tower_;
  std::map<std::vector<int>, std::vector<LPoly>> cache_;
  std::map<std::vector<int>, LPoly> trace_cache_;
};

/// How the determinant of the trace form is obtained.
///  - Bareiss: fraction-free elimination on the e! x e! matrix itself.
///  - Tower: the matrix factors as (I ⊗ T_B)·L over B = S[X_e]/(f_e)
///    with commuting blocks L, so det = det(T_B)^{(e-1)!} · N_{B/S}(det_B Q)
///    recursively down the tower; exact, and polynomial in cost.
enum class DeterminantMethod { Auto, Bareiss, Tower };

struct TraceForm {
  std::vector<ArtinExponent> basis;
  /// entries[mu][nu] = tr(X^mu X^nu)
  std::vector<std::vector<SymCoords>> entries;
  SymCoords delta;
  DeterminantMethod method = DeterminantMethod::Bareiss;
};

/// Auto picks Bareiss for e <= 3 and Tower above.
TraceForm trace_form(int e, DeterminantMethod method = DeterminantMethod::Auto);

/// Determinant of the trace form via the tower factorization alone.
SymCoords tower_discriminant(int e);

/// d = prod_{i<j} (X_i - X_j)^2 in centre coordinates (1 for e = 1).
SymCoords discriminant_d(int e);

struct DiscPower {
  SymCoords delta;
  SymCoords d;
  Rat c;
  int k = 0;
};

/// Delta = c * d^k by repeated exact division; throws NotAPower otherwise.
DiscPower disc_power_check(int e);
/// Same, given an already computed Delta.
DiscPower disc_power_check(int e, const SymCoords& delta);

}  // namespace hc
