#include "heckecentre/symmetric.hpp"

#include <map>
#include <tuple>

#include "heckecentre/error.hpp"

namespace hc {

BlockShape::BlockShape(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw Error(Errc::InvalidInput, "shape needs at least one block");
  for (int e : sizes_)
    if (e < 1) throw Error(Errc::InvalidInput, "block sizes must be positive");
}

std::size_t BlockShape::group_order() const {
  std::size_t n = 1;
  for (int e : sizes_) n *= factorial(e);
  return n;
}

int BlockShape::total_variables() const {
  int n = 0;
  for (int e : sizes_) n += e;
  return n;
}

std::vector<VarId> BlockShape::x_variables() const {
  std::vector<VarId> out;
  for (int i = 1; i <= blocks(); ++i)
    for (int k = 1; k <= size(i); ++k) out.push_back(VarId::x(k, i));
  return out;
}

std::string BlockShape::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes_[i]);
  }
  return out + ")";
}

GroupElem GroupElem::identity(const BlockShape& shape) {
  std::vector<Perm> parts;
  for (int e : shape.sizes()) parts.push_back(Perm::identity(e));
  return GroupElem(std::move(parts));
}

GroupElem GroupElem::transposition(const BlockShape& shape, int block, int slot) {
  GroupElem g = identity(shape);
  if (block < 1 || block > shape.blocks()) throw Error(Errc::OutOfRange, "block index");
  g.parts_[block - 1] = Perm::simple(shape.size(block), slot - 1);
  return g;
}

BlockShape GroupElem::shape() const {
  std::vector<int> sizes;
  for (const auto& p : parts_) sizes.push_back(p.size());
  return BlockShape(std::move(sizes));
}

GroupElem operator*(const GroupElem& a, const GroupElem& b) {
  if (a.parts_.size() != b.parts_.size()) throw Error(Errc::ShapeMismatch, "group elements of different shapes");
  std::vector<Perm> parts;
  for (std::size_t i = 0; i < a.parts_.size(); ++i) parts.push_back(a.parts_[i] * b.parts_[i]);
  return GroupElem(std::move(parts));
}

GroupElem GroupElem::inverse() const {
  std::vector<Perm> parts;
  for (const auto& p : parts_) parts.push_back(p.inverse());
  return GroupElem(std::move(parts));
}

std::vector<GroupElem> group_elements(const BlockShape& shape) {
  std::vector<std::vector<Perm>> per_block;
  for (int e : shape.sizes()) per_block.push_back(all_perms(e));
  std::vector<GroupElem> out;
  std::vector<std::size_t> idx(per_block.size(), 0);
  while (true) {
    std::vector<Perm> parts;
    for (std::size_t b = 0; b < per_block.size(); ++b) parts.push_back(per_block[b][idx[b]]);
    out.emplace_back(std::move(parts));
    // Odometer with the last block varying fastest.
    std::size_t b = per_block.size();
    while (b > 0) {
      --b;
      if (++idx[b] < per_block[b].size()) break;
      idx[b] = 0;
      if (b == 0) return out;
    }
    if (per_block.empty()) return out;
  }
}

std::vector<GroupElem> group_generators(const BlockShape& shape) {
  std::vector<GroupElem> out;
  for (int i = 1; i <= shape.blocks(); ++i)
    for (int k = 1; k < shape.size(i); ++k) out.push_back(GroupElem::transposition(shape, i, k));
  return out;
}

void check_in_shape(const BlockShape& shape, const LPoly& p) {
  for (VarId v : p.variables()) {
    if (v.block < 1 || v.block > shape.blocks() || v.slot > shape.size(v.block))
      throw Error(Errc::ShapeMismatch, v.to_string() + " is outside shape " + shape.to_string());
  }
}

void validate_sym_coords(const SymCoords& c, const BlockShape& shape) {
  for (VarId v : c.value.variables()) {
    if (v.kind != VarKind::S) throw Error(Errc::InvalidInput, "centre coordinates use s-variables only");
    if (v.block < 1 || v.block > shape.blocks() || v.slot > shape.size(v.block))
      throw Error(Errc::ShapeMismatch, v.to_string() + " is outside shape " + shape.to_string());
    if (v.slot < shape.size(v.block) && c.value.min_exponent(v) < 0)
      throw Error(Errc::InvalidInput, "negative exponent on " + v.to_string());
  }
}

LPoly act(const GroupElem& g, const LPoly& p) {
  const BlockShape shape = g.shape();
  check_in_shape(shape, p);
  return p.rename([&](VarId v) {
    if (v.kind != VarKind::X) return v;
    const Perm& pi = g.parts()[v.block - 1];
    return VarId::x(pi(v.slot - 1) + 1, v.block);
  });
}

LPoly elem_sym(const BlockShape& shape, int block, int k) {
  if (block < 1 || block > shape.blocks()) throw Error(Errc::OutOfRange, "block index " + std::to_string(block));
  const int e = shape.size(block);
  if (k < 0 || k > e) throw Error(Errc::OutOfRange, "k = " + std::to_string(k) + " exceeds e = " + std::to_string(e));
  // Generating function prod_j (1 + X_j t), coefficient of t^k.
  std::vector<LPoly> coeffs{LPoly(1)};
  for (int j = 1; j <= e; ++j) {
    const LPoly x = LPoly::var(VarId::x(j, block));
    std::vector<LPoly> next(coeffs.size() + 1);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d] += coeffs[d];
      next[d + 1] += coeffs[d] * x;
    }
    coeffs = std::move(next);
  }
  return coeffs[k];
}

LPoly reynolds(const BlockShape& shape, const LPoly& p) {
  check_in_shape(shape, p);
  LPoly sum;
  const auto elems = group_elements(shape);
  for (const auto& g : elems) sum += act(g, p);
  return sum * Rat(1, static_cast<unsigned long>(elems.size()));
}

bool is_invariant(const BlockShape& shape, const LPoly& p) {
  check_in_shape(shape, p);
  for (const auto& g : group_generators(shape))
    if (!(act(g, p) == p)) return false;
  return true;
}

namespace {

/// Caches powers of elementary symmetric polynomials.
class ElemSymPowers {
 public:
  explicit ElemSymPowers(const BlockShape& shape) : shape_(shape) {}

  const LPoly& get(int block, int k, int exp) {
    auto key = std::make_tuple(block, k, exp);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    LPoly value = exp == 0 ? LPoly(1)
                  : exp == 1 ? elem_sym(shape_, block, k)
                             : get(block, k, exp - 1) * get(block, k, 1);
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  const BlockShape& shape_;
  std::map<std::tuple<int, int, int>, LPoly> cache_;
};

}  // namespace

SymCoords to_sym_coords(const BlockShape& shape, const LPoly& p) {
  check_in_shape(shape, p);
  for (VarId v : p.variables())
    if (v.kind != VarKind::X) throw Error(Errc::InvalidInput, "expected a polynomial in X-variables");
  if (!is_invariant(shape, p)) throw Error(Errc::NotInvariant, p.to_string());

  // Clear Laurent denominators with powers of the block products s_{e_i,i}.
  std::vector<int> shift(static_cast<std::size_t>(shape.blocks()), 0);
  std::vector<Mono::Entry> clear;
  for (int i = 1; i <= shape.blocks(); ++i) {
    shift[i - 1] = std::max(0, -p.min_exponent(VarId::x(1, i)));
    for (int k = 1; k <= shape.size(i); ++k)
      if (shift[i - 1] > 0) clear.emplace_back(VarId::x(k, i).code(), shift[i - 1]);
  }
  LPoly rest = p.mul_mono(Mono::from_entries(std::move(clear)));

  ElemSymPowers powers(shape);
  std::vector<Term> result;
  while (!rest.is_zero()) {
    const Term lead = rest.lex_leading();
    std::vector<Mono::Entry> s_exps;
    LPoly image(lead.coeff);
    for (int i = 1; i <= shape.blocks(); ++i) {
      const int e = shape.size(i);
      for (int k = 1; k <= e; ++k) {
        const int a = lead.mono.exponent(VarId::x(k, i));
        const int next = k < e ? lead.mono.exponent(VarId::x(k + 1, i)) : 0;
        const int d = a - next;
        if (d < 0) throw Error(Errc::NotInvariant, "leading exponents not weakly decreasing");
        if (d == 0) continue;
        s_exps.emplace_back(VarId::s(k, i).code(), d);
        image = image * powers.get(i, k, d);
      }
    }
    result.push_back({Mono::from_entries(std::move(s_exps)), lead.coeff});
    rest -= image;
  }

  std::vector<Mono::Entry> unclear;
  for (int i = 1; i <= shape.blocks(); ++i)
    if (shift[i - 1] > 0) unclear.emplace_back(VarId::s(shape.size(i), i).code(), -shift[i - 1]);
  return {LPoly::from_terms(std::move(result)).mul_mono(Mono::from_entries(std::move(unclear)))};
}

LPoly from_sym_coords(const BlockShape& shape, const SymCoords& c) {
  validate_sym_coords(c, shape);
  ElemSymPowers powers(shape);
  LPoly out;
  for (const auto& t : c.value.terms()) {
    LPoly term(t.coeff);
    for (const auto& [code, exp] : t.mono.entries()) {
      const VarId v = VarId::from_code(code);
      if (exp >= 0) {
        term = term * powers.get(v.block, v.slot, exp);
      } else {
        term = term * powers.get(v.block, v.slot, -exp).unit_inverse();
      }
    }
    out += term;
  }
  return out;
}

}  // namespace hc
