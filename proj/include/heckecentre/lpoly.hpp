#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heckecentre/rational.hpp"

namespace hc {

/// X_{k,i} are the torus coordinates; S_{k,i} are the formal centre
/// coordinates s_{k,i}. Both live in the same polynomial type so that
/// tower relations can mix them.
enum class VarKind : std::uint8_t { X = 0, S = 1 };

/// Variable (slot k, block i), both 1-based.
struct VarId {
  VarKind kind = VarKind::X;
  int block = 1;
  int slot = 1;

  static constexpr VarId x(int slot, int block = 1) { return {VarKind::X, block, slot}; }
  static constexpr VarId s(int slot, int block = 1) { return {VarKind::S, block, slot}; }

  /// Canonical variable order is (kind, block, slot) ascending.
  std::uint32_t code() const noexcept {
    return (static_cast<std::uint32_t>(kind) << 28) | (static_cast<std::uint32_t>(block) << 14) |
           static_cast<std::uint32_t>(slot);
  }
  static VarId from_code(std::uint32_t c) noexcept {
    return {static_cast<VarKind>(c >> 28), static_cast<int>((c >> 14) & 0x3fff),
            static_cast<int>(c & 0x3fff)};
  }

  friend bool operator==(const VarId& a, const VarId& b) noexcept { return a.code() == b.code(); }
  friend auto operator<=>(const VarId& a, const VarId& b) noexcept { return a.code() <=> b.code(); }

  /// "X_{k,i}" or "s_{k,i}".
  std::string to_string() const;
};

/// Laurent monomial: sorted (variable code, exponent) pairs, no zero exponents.
class Mono {
 public:
  using Entry = std::pair<std::uint32_t, int>;

  Mono() = default;
  static Mono var(VarId v, int exponent = 1);
  static Mono from_entries(std::vector<Entry> entries);

  int exponent(VarId v) const noexcept;
  int total_degree() const noexcept;
  bool is_one() const noexcept { return entries_.empty(); }
  bool has_negative() const noexcept;
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  Mono operator*(const Mono& other) const;
  Mono inverse() const;
  /// True when every exponent of `other` is <= ours in the ordinary
  /// polynomial sense (used by polynomial division).
  bool divisible_by(const Mono& other) const noexcept;

  friend bool operator==(const Mono& a, const Mono& b) noexcept { return a.entries_ == b.entries_; }

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  std::vector<Entry> entries_;
};

/// Graded-lexicographic on the canonical variable order: total degree
/// first, then the first variable (in canonical order) whose exponents
/// differ decides.
std::strong_ordering grlex_compare(const Mono& a, const Mono& b) noexcept;
/// Pure lexicographic on the canonical variable order.
std::strong_ordering lex_compare(const Mono& a, const Mono& b) noexcept;

struct MonoHash {
  std::size_t operator()(const Mono& m) const noexcept { return m.hash(); }
};

struct Term {
  Mono mono;
  Rat coeff;
};

/// Sparse multivariate Laurent polynomial over Rat. Terms are kept in
/// descending graded-lex order, coefficients nonzero; the zero polynomial
/// has no terms.
class LPoly {
 public:
  LPoly() = default;
  LPoly(const Rat& c);  // NOLINT: constants convert implicitly
  LPoly(long c) : LPoly(Rat(c)) {}  // NOLINT
  static LPoly var(VarId v, int exponent = 1);
  static LPoly monomial(Mono m, Rat c = 1);
  /// Builds from unsorted terms, combining duplicates and dropping zeros.
  static LPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Single term: a unit of the Laurent ring.
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }
  Rat constant_term() const;
  Rat coeff(const Mono& m) const;

  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
  LPoly& operator*=(const Rat& c);
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly operator*(LPoly a, const Rat& c) { return a *= c; }
  friend LPoly operator*(const Rat& c, LPoly a) { return a *= c; }
  friend bool operator==(const LPoly& a, const LPoly& b) noexcept;

  LPoly pow(unsigned n) const;
  LPoly mul_mono(const Mono& m, const Rat& c = 1) const;
  /// Inverse of a single-term polynomial; throws NotExact otherwise.
  LPoly unit_inverse() const;

  /// Minimum / maximum exponent of v over all terms (0 for the zero poly).
  int min_exponent(VarId v) const noexcept;
  int max_exponent(VarId v) const noexcept;
  bool has_negative_exponent() const noexcept;
  std::vector<VarId> variables() const;

  /// Replace every variable by the image under `f` (nullopt keeps it).
  LPoly substitute(const std::function<std::optional<LPoly>(VarId)>& f) const;
  /// Rename variables monomial-wise (a ring morphism if f is injective).
  LPoly rename(const std::function<VarId(VarId)>& f) const;

  /// Leading term under lex (rather than the stored grlex) order.
  const Term& lex_leading() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

using Assignment = std::map<VarId, Rat>;

/// Exact evaluation; throws MissingAssignment / ZeroAtNegativeExponent.
Rat lp_eval(const LPoly& p, const Assignment& point);

LPoly lp_mul(const LPoly& a, const LPoly& b);

/// Partial evaluation: assigned variables are replaced, others kept.
LPoly lp_partial_eval(const LPoly& p, const Assignment& point);

/// Polynomial division a = q*b + r under grlex (no negative exponents).
struct DivResult {
  LPoly quotient;
  LPoly remainder;
};
DivResult lp_divmod(const LPoly& a, const LPoly& b);
/// Throws NotExact when b does not divide a.
LPoly lp_div_exact(const LPoly& a, const LPoly& b);

/// Parses the canonical text form (and a slightly looser superset:
/// integer coefficients, implicit 1, '-' separators).
LPoly parse_lpoly(std::string_view text);

}  // namespace hc
