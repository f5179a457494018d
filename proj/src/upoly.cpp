#include "heckecentre/upoly.hpp"

#include <algorithm>

namespace hc {

RatUPoly up_monic(const RatUPoly& f) {
  if (f.is_zero()) return f;
  return f.scaled(Rat(1) / f.leading());
}

RatUPoly up_gcd(const RatUPoly& f, const RatUPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(Errc::InvalidInput, "gcd(0, 0) is undefined");
  RatUPoly a = f, b = g;
  while (!b.is_zero()) {
    RatUPoly r = up_divmod(a, b).remainder;
    a = std::move(b);
    b = up_monic(r);
  }
  return up_monic(a);
}

LUPoly to_upoly(const LPoly& p, VarId v) {
  if (p.min_exponent(v) < 0)
    throw Error(Errc::NegativeExponentInput, v.to_string() + " occurs with a negative exponent");
  const int deg = p.max_exponent(v);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(deg) + 1);
  const auto code = v.code();
  for (const auto& t : p.terms()) {
    std::vector<Mono::Entry> rest;
    int k = 0;
    for (const auto& e : t.mono.entries()) {
      if (e.first == code)
        k = e.second;
      else
        rest.push_back(e);
    }
    buckets[k].push_back({Mono::from_entries(std::move(rest)), t.coeff});
  }
  std::vector<LPoly> coeffs;
  coeffs.reserve(buckets.size());
  for (auto& b : buckets) coeffs.push_back(LPoly::from_terms(std::move(b)));
  return LUPoly(std::move(coeffs));
}

LPoly from_upoly(const LUPoly& f, VarId v) {
  LPoly out;
  for (int k = 0; k <= f.degree(); ++k) out += f.coeffs()[k].mul_mono(Mono::var(v, k));
  return out;
}

namespace {

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

RationalRoots rational_roots(const RatUPoly& f) {
  if (f.is_zero()) throw Error(Errc::InvalidInput, "roots of the zero polynomial");
  RationalRoots out;
  RatUPoly cur = up_monic(f);
  while (cur.degree() >= 1 && cur.coeff(0) == 0) {
    out.roots.push_back(Rat(0));
    cur = up_div_exact(cur, RatUPoly::linear_root(Rat(0)));
  }
  bool progress = true;
  while (progress && cur.degree() >= 1) {
    progress = false;
    BigInt lcm_den = 1;
    for (const auto& c : cur.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    const BigInt a0 = Rat(cur.coeff(0) * Rat(lcm_den)).get_num();
    const BigInt an = Rat(cur.leading() * Rat(lcm_den)).get_num();
    for (const auto& p : divisors(a0)) {
      for (const auto& q : divisors(an)) {
        for (int sign : {1, -1}) {
          Rat cand(p * sign, q);
          cand.canonicalize();
          if (cur.eval(cand) == 0) {
            out.roots.push_back(cand);
            cur = up_div_exact(cur, RatUPoly::linear_root(cand));
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.residual = cur;
  return out;
}

}  // namespace hc
