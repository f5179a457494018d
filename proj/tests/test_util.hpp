#pragma once

#include <vector>

#include "heckecentre/lpoly.hpp"
#include "heckecentre/rng.hpp"

namespace hc::test {

inline LPoly X(int k, int b = 1) { return LPoly::var(VarId::x(k, b)); }
inline LPoly S(int k, int b = 1) { return LPoly::var(VarId::s(k, b)); }
inline LPoly P(const char* text) { return parse_lpoly(text); }

/// Random Laurent polynomial in `vars` with up to `terms` terms, exponents
/// in [lo, hi] and small integer coefficients.
inline LPoly random_poly(SplitMix64& rng, const std::vector<VarId>& vars, int terms, int lo, int hi) {
  std::vector<Term> out;
  const int n = static_cast<int>(rng.uniform(0, terms));
  for (int t = 0; t < n; ++t) {
    Mono m;
    for (const auto& v : vars) {
      const int k = static_cast<int>(rng.uniform(lo, hi));
      if (k != 0) m = m * Mono::var(v, k);
    }
    long c = rng.uniform(-9, 9);
    if (c == 0) c = 1;
    out.push_back({m, make_rat(c, static_cast<long>(rng.uniform(1, 3)))});
  }
  return LPoly::from_terms(std::move(out));
}

}  // namespace hc::test
