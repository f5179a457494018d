#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hc {

/// Exact rational. GMP keeps results of arithmetic in canonical form
/// (gcd(|num|, den) = 1, den > 0); use make_rat() for num/den construction.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// "num/den", always with an explicit denominator ("3/1", "0/1").
std::string rat_to_string(const Rat& r);

/// Accepts "n", "n/d", and optional sign; throws Error(ParseError).
Rat parse_rat(std::string_view text);

bool is_integer(const Rat& r);

Rat rat_pow(const Rat& base, long exponent);

}  // namespace hc
