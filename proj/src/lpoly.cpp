#include "heckecentre/lpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>

#include "heckecentre/error.hpp"

namespace hc {

std::string VarId::to_string() const {
  return std::string(kind == VarKind::X ? "X" : "s") + "_{" + std::to_string(slot) + "," +
         std::to_string(block) + "}";
}

// ---------------------------------------------------------------- Mono

Mono Mono::var(VarId v, int exponent) {
  Mono m;
  if (exponent != 0) m.entries_.emplace_back(v.code(), exponent);
  return m;
}

Mono Mono::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  Mono m;
  for (const auto& [code, exp] : entries) {
    if (!m.entries_.empty() && m.entries_.back().first == code)
      m.entries_.back().second += exp;
    else
      m.entries_.emplace_back(code, exp);
    if (m.entries_.back().second == 0) m.entries_.pop_back();
  }
  return m;
}

int Mono::exponent(VarId v) const noexcept {
  const auto code = v.code();
  auto it = std::lower_bound(entries_.begin(), entries_.end(), code,
                             [](const Entry& e, std::uint32_t c) { return e.first < c; });
  return (it != entries_.end() && it->first == code) ? it->second : 0;
}

int Mono::total_degree() const noexcept {
  int d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

bool Mono::has_negative() const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second < 0; });
}

Mono Mono::operator*(const Mono& other) const {
  Mono out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.entries_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Mono Mono::inverse() const {
  Mono out = *this;
  for (auto& e : out.entries_) e.second = -e.second;
  return out;
}

bool Mono::divisible_by(const Mono& other) const noexcept {
  for (const auto& [code, exp] : other.entries_) {
    if (exp <= 0) continue;
    if (exponent(VarId::from_code(code)) < exp) return false;
  }
  return true;
}

std::size_t Mono::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [code, exp] : entries_) {
    h ^= (static_cast<std::size_t>(code) * 0x100000001b3ULL) + static_cast<std::size_t>(exp) +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::string Mono::to_string() const {
  std::string out;
  for (const auto& [code, exp] : entries_) {
    if (!out.empty()) out += '*';
    out += VarId::from_code(code).to_string();
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

std::strong_ordering lex_compare(const Mono& a, const Mono& b) noexcept {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    // The smallest variable present in either monomial is the first
    // position where they can differ.
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      return ea[i].second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i == ea.size() || eb[j].first < ea[i].first) {
      return eb[j].second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (ea[i].second != eb[j].second) return ea[i].second <=> eb[j].second;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grlex_compare(const Mono& a, const Mono& b) noexcept {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return lex_compare(a, b);
}

namespace {

struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const noexcept { return grlex_compare(a, b) > 0; }
};

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; });
}

}  // namespace

// ---------------------------------------------------------------- LPoly

LPoly::LPoly(const Rat& c) {
  if (c != 0) terms_.push_back({Mono{}, c});
}

LPoly LPoly::var(VarId v, int exponent) { return monomial(Mono::var(v, exponent), 1); }

LPoly LPoly::monomial(Mono m, Rat c) {
  LPoly p;
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

LPoly LPoly::from_terms(std::vector<Term> terms) {
  std::unordered_map<Mono, Rat, MonoHash> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(std::move(t.mono), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  LPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  sort_terms(p.terms_);
  return p;
}

bool LPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rat LPoly::constant_term() const { return coeff(Mono{}); }

Rat LPoly::coeff(const Mono& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Mono& key) {
    return grlex_compare(t.mono, key) > 0;
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rat(0);
}

LPoly LPoly::operator-() const {
  LPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.end())
      c = std::strong_ordering::less;
    else if (j == b.end())
      c = std::strong_ordering::greater;
    else
      c = grlex_compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(negate_b ? Term{j->mono, -j->coeff} : *j);
      ++j;
    } else {
      Rat s = negate_b ? Rat(i->coeff - j->coeff) : Rat(i->coeff + j->coeff);
      if (s != 0) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LPoly& LPoly::operator+=(const LPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

LPoly& LPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.mul_mono(a.terms_.front().mono, a.terms_.front().coeff);
  if (b.size() == 1) return a.mul_mono(b.terms_.front().mono, b.terms_.front().coeff);
  std::unordered_map<Mono, Rat, MonoHash> acc;
  acc.reserve(a.size() * b.size());
  Rat prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      prod = ta.coeff * tb.coeff;
      auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono, prod);
      if (!inserted) it->second += prod;
    }
  }
  LPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  sort_terms(p.terms_);
  return p;
}

bool operator==(const LPoly& a, const LPoly& b) noexcept {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

LPoly LPoly::pow(unsigned n) const {
  LPoly result(1);
  LPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

LPoly LPoly::mul_mono(const Mono& m, const Rat& c) const {
  LPoly out;
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
  // Multiplying by a monomial preserves grlex order.
  return out;
}

LPoly LPoly::unit_inverse() const {
  if (!is_monomial())
    throw Error(Errc::NotExact, "not a unit of the Laurent ring: " + to_string());
  return monomial(terms_.front().mono.inverse(), Rat(1) / terms_.front().coeff);
}

int LPoly::min_exponent(VarId v) const noexcept {
  if (terms_.empty()) return 0;
  int m = terms_.front().mono.exponent(v);
  for (const auto& t : terms_) m = std::min(m, t.mono.exponent(v));
  return m;
}

int LPoly::max_exponent(VarId v) const noexcept {
  if (terms_.empty()) return 0;
  int m = terms_.front().mono.exponent(v);
  for (const auto& t : terms_) m = std::max(m, t.mono.exponent(v));
  return m;
}

bool LPoly::has_negative_exponent() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.has_negative(); });
}

std::vector<VarId> LPoly::variables() const {
  std::vector<std::uint32_t> codes;
  for (const auto& t : terms_)
    for (const auto& e : t.mono.entries()) codes.push_back(e.first);
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<VarId> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(VarId::from_code(c));
  return out;
}

LPoly LPoly::substitute(const std::function<std::optional<LPoly>(VarId)>& f) const {
  std::map<std::pair<std::uint32_t, int>, LPoly> power_cache;
  std::map<std::uint32_t, std::optional<LPoly>> image_cache;
  auto image = [&](std::uint32_t code) -> const std::optional<LPoly>& {
    auto it = image_cache.find(code);
    if (it == image_cache.end()) it = image_cache.emplace(code, f(VarId::from_code(code))).first;
    return it->second;
  };
  auto power = [&](std::uint32_t code, int exp) -> const LPoly& {
    auto key = std::make_pair(code, exp);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    const LPoly& base = *image(code);
    LPoly value = exp >= 0 ? base.pow(static_cast<unsigned>(exp))
                           : base.unit_inverse().pow(static_cast<unsigned>(-exp));
    return power_cache.emplace(key, std::move(value)).first->second;
  };
  LPoly out;
  for (const auto& t : terms_) {
    LPoly term(t.coeff);
    std::vector<Mono::Entry> kept;
    for (const auto& [code, exp] : t.mono.entries()) {
      if (image(code))
        term = term * power(code, exp);
      else
        kept.emplace_back(code, exp);
    }
    out += term.mul_mono(Mono::from_entries(std::move(kept)));
  }
  return out;
}

LPoly LPoly::rename(const std::function<VarId(VarId)>& f) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Mono::Entry> entries;
    entries.reserve(t.mono.entries().size());
    for (const auto& [code, exp] : t.mono.entries()) entries.emplace_back(f(VarId::from_code(code)).code(), exp);
    terms.push_back({Mono::from_entries(std::move(entries)), t.coeff});
  }
  return from_terms(std::move(terms));
}

const Term& LPoly::lex_leading() const {
  if (terms_.empty()) throw Error(Errc::InvalidInput, "leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (lex_compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

std::string LPoly::to_string() const {
  if (terms_.empty()) return "0/1";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += rat_to_string(t.coeff);
    if (!t.mono.is_one()) out += "*" + t.mono.to_string();
  }
  return out;
}

// ---------------------------------------------------------------- free functions

LPoly lp_mul(const LPoly& a, const LPoly& b) { return a * b; }

Rat lp_eval(const LPoly& p, const Assignment& point) {
  std::map<std::pair<std::uint32_t, int>, Rat> powers;
  Rat total = 0;
  for (const auto& t : p.terms()) {
    Rat term = t.coeff;
    for (const auto& [code, exp] : t.mono.entries()) {
      auto key = std::make_pair(code, exp);
      auto it = powers.find(key);
      if (it == powers.end()) {
        const VarId v = VarId::from_code(code);
        auto value = point.find(v);
        if (value == point.end()) throw Error(Errc::MissingAssignment, "no value for " + v.to_string());
        if (exp < 0 && value->second == 0)
          throw Error(Errc::ZeroAtNegativeExponent, v.to_string() + " = 0 appears with exponent " + std::to_string(exp));
        it = powers.emplace(key, rat_pow(value->second, exp)).first;
      }
      term *= it->second;
    }
    total += term;
  }
  return total;
}

LPoly lp_partial_eval(const LPoly& p, const Assignment& point) {
  return p.substitute([&](VarId v) -> std::optional<LPoly> {
    auto it = point.find(v);
    if (it == point.end()) return std::nullopt;
    if (it->second == 0 && p.min_exponent(v) < 0)
      throw Error(Errc::ZeroAtNegativeExponent, v.to_string() + " = 0 at a negative exponent");
    return LPoly(it->second);
  });
}

DivResult lp_divmod(const LPoly& a, const LPoly& b) {
  if (b.is_zero()) throw Error(Errc::InvalidInput, "division by the zero polynomial");
  if (a.has_negative_exponent() || b.has_negative_exponent())
    throw Error(Errc::NegativeExponentInput, "polynomial division needs nonnegative exponents");
  const Term& lead = b.leading();
  const Rat lead_inv = Rat(1) / lead.coeff;

  // Workspace ordered by grlex descending; the largest term is always begin().
  std::map<Mono, Rat, GrlexGreater> work;
  for (const auto& t : a.terms()) work.emplace(t.mono, t.coeff);
  std::vector<Term> quotient, remainder;
  while (!work.empty()) {
    auto top = work.begin();
    if (!top->first.divisible_by(lead.mono)) {
      remainder.push_back({top->first, top->second});
      work.erase(top);
      continue;
    }
    Mono qm = top->first * lead.mono.inverse();
    Rat qc = top->second * lead_inv;
    work.erase(top);
    for (std::size_t k = 1; k < b.terms().size(); ++k) {
      const Term& bt = b.terms()[k];
      Mono m = bt.mono * qm;
      Rat c = bt.coeff * qc;
      auto [it, inserted] = work.try_emplace(std::move(m), -c);
      if (!inserted) {
        it->second -= c;
        if (it->second == 0) work.erase(it);
      }
    }
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  return {LPoly::from_terms(std::move(quotient)), LPoly::from_terms(std::move(remainder))};
}

LPoly lp_div_exact(const LPoly& a, const LPoly& b) {
  auto [q, r] = lp_divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::NotExact, "nonzero remainder " + r.to_string());
  return q;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LPoly parse() {
    skip_ws();
    LPoly out;
    if (eat('0') && at_end_after_ws_or("/1")) return out;
    pos_ = 0;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (peek() == '+') {
        ++pos_;
      } else if (peek() == '-') {
        // "a - b" separator; a leading "-3/1" coefficient is handled in term().
        if (!first) {
          ++pos_;
          sign = -1;
        }
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      skip_ws();
      out += term() * Rat(sign);
      first = false;
    }
    if (first) fail("empty polynomial");
    return out;
  }

 private:
  LPoly term() {
    Rat coeff = 1;
    Mono mono;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-')) {
        const std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
        const auto text = s_.substr(start, pos_ - start);
        coeff *= text == "-" ? Rat(-1) : parse_rat(text);
      } else if (pos_ < s_.size() && (peek() == 'X' || peek() == 's')) {
        mono = mono * variable();
      } else {
        fail("expected coefficient or variable");
      }
      have_factor = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    return LPoly::monomial(mono, coeff);
  }

  Mono variable() {
    const VarKind kind = peek() == 'X' ? VarKind::X : VarKind::S;
    ++pos_;
    expect('_');
    expect('{');
    const int slot = integer();
    expect(',');
    const int block = integer();
    expect('}');
    int exp = 1;
    if (pos_ < s_.size() && peek() == '^') {
      ++pos_;
      exp = integer();
    }
    if (slot < 1 || block < 1) fail("variable indices are 1-based");
    return Mono::var(VarId{kind, block, slot}, exp);
  }

  int integer() {
    const std::size_t start = pos_;
    if (pos_ < s_.size() && peek() == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("expected integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  bool at_end_after_ws_or(std::string_view suffix) {
    std::size_t p = pos_;
    if (s_.substr(p, suffix.size()) == suffix) p += suffix.size();
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    return p == s_.size();
  }

  char peek() const { return s_[pos_]; }
  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LPoly parse_lpoly(std::string_view text) { return Parser(text).parse(); }

}  // namespace hc
