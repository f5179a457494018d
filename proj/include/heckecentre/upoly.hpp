#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heckecentre/error.hpp"
#include "heckecentre/lpoly.hpp"
#include "heckecentre/rational.hpp"

namespace hc {

template <class C>
struct CoeffRing;

template <>
struct CoeffRing<Rat> {
  static bool is_zero(const Rat& c) { return c == 0; }
  static bool is_unit(const Rat& c) { return c != 0; }
  static Rat inverse(const Rat& c) { return Rat(1) / c; }
  static std::string to_string(const Rat& c) { return rat_to_string(c); }
};

/// Units of the Laurent ring are exactly the nonzero single terms.
template <>
struct CoeffRing<LPoly> {
  static bool is_zero(const LPoly& c) { return c.is_zero(); }
  static bool is_unit(const LPoly& c) { return c.is_monomial(); }
  static LPoly inverse(const LPoly& c) { return c.unit_inverse(); }
  static std::string to_string(const LPoly& c) { return "(" + c.to_string() + ")"; }
};

/// Dense univariate polynomial in T; coeffs()[k] multiplies T^k.
template <class C>
class UPoly {
  using Ring = CoeffRing<C>;

 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(C c) { return UPoly(std::vector<C>{std::move(c)}); }
  /// T - root
  static UPoly linear_root(const C& root) { return UPoly(std::vector<C>{C(0) - root, C(1)}); }
  static UPoly monomial(unsigned degree, C c = C(1)) {
    std::vector<C> v(degree + 1, C(0));
    v[degree] = std::move(c);
    return UPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const C& leading() const { return c_.back(); }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : C(0); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<C> out(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return UPoly(std::move(out));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<C> out(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return UPoly(std::move(out));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Ring::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  UPoly scaled(const C& s) const {
    std::vector<C> out = c_;
    for (auto& c : out) c = c * s;
    return UPoly(std::move(out));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> out;
    out.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * C(static_cast<long>(k)));
    return UPoly(std::move(out));
  }

  /// Horner evaluation at an element of the coefficient ring.
  C eval(const C& x) const {
    C acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::string to_string(const std::string& var = "T") const {
    if (c_.empty()) return Ring::to_string(C(0));
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (Ring::is_zero(c_[k])) continue;
      if (!out.empty()) out += " + ";
      out += Ring::to_string(c_[k]);
      if (k >= 1) out += "*" + var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && Ring::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

template <class C>
struct UDivResult {
  UPoly<C> quotient;
  UPoly<C> remainder;
};

/// Long division; the divisor's leading coefficient must be a unit.
template <class C>
UDivResult<C> up_divmod(const UPoly<C>& f, const UPoly<C>& g) {
  using Ring = CoeffRing<C>;
  if (g.is_zero()) throw Error(Errc::InvalidInput, "division by the zero polynomial");
  if (!Ring::is_unit(g.leading()))
    throw Error(Errc::InvalidInput, "leading coefficient of divisor is not a unit");
  const C lead_inv = Ring::inverse(g.leading());
  std::vector<C> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {{}, f};
  std::vector<C> quot(f.degree() - dg + 1, C(0));
  for (int k = f.degree(); k >= dg; --k) {
    if (Ring::is_zero(rem[k])) continue;
    C q = rem[k] * lead_inv;
    for (int j = 0; j <= dg; ++j) rem[k - dg + j] -= q * g.coeffs()[j];
    quot[k - dg] = std::move(q);
  }
  rem.resize(dg);
  return {UPoly<C>(std::move(quot)), UPoly<C>(std::move(rem))};
}

/// Throws NotExact when the remainder is nonzero.
template <class C>
UPoly<C> up_div_exact(const UPoly<C>& f, const UPoly<C>& g) {
  auto [q, r] = up_divmod(f, g);
  if (!r.is_zero()) throw Error(Errc::NotExact, "remainder " + r.to_string());
  return q;
}

using RatUPoly = UPoly<Rat>;
using LUPoly = UPoly<LPoly>;

RatUPoly up_monic(const RatUPoly& f);

/// Monic gcd over Q; gcd(f, 0) = monic(f). Both zero is an InvalidInput.
RatUPoly up_gcd(const RatUPoly& f, const RatUPoly& g);

/// View p as a polynomial in v with coefficients in the other variables.
/// Throws NegativeExponentInput when v occurs with a negative exponent.
LUPoly to_upoly(const LPoly& p, VarId v);
LPoly from_upoly(const LUPoly& f, VarId v);

/// Rational roots (with multiplicity) of a polynomial over Q; the monic
/// factor left after extracting them is returned in `residual`.
struct RationalRoots {
  std::vector<Rat> roots;
  RatUPoly residual;
};
RationalRoots rational_roots(const RatUPoly& f);

}  // namespace hc
