#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "heckecentre/lpoly.hpp"
#include "heckecentre/permutation.hpp"

namespace hc {

/// Block sizes (e_1, ..., e_s); the group is S_{e_1} x ... x S_{e_s}.
class BlockShape {
 public:
  BlockShape() = default;
  explicit BlockShape(std::vector<int> sizes);

  int blocks() const noexcept { return static_cast<int>(sizes_.size()); }
  /// e_i for a 1-based block index.
  int size(int block) const { return sizes_.at(static_cast<std::size_t>(block - 1)); }
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  std::size_t group_order() const;
  int total_variables() const;

  /// X variables in canonical order: block by block, slot ascending.
  std::vector<VarId> x_variables() const;

  friend bool operator==(const BlockShape&, const BlockShape&) = default;
  std::string to_string() const;

 private:
  std::vector<int> sizes_;
};

/// Element of the product group: one permutation per block.
class GroupElem {
 public:
  GroupElem() = default;
  explicit GroupElem(std::vector<Perm> parts) : parts_(std::move(parts)) {}
  static GroupElem identity(const BlockShape& shape);
  /// Adjacent transposition (slot, slot+1) inside one block (1-based).
  static GroupElem transposition(const BlockShape& shape, int block, int slot);

  const std::vector<Perm>& parts() const noexcept { return parts_; }
  BlockShape shape() const;

  friend GroupElem operator*(const GroupElem& a, const GroupElem& b);
  GroupElem inverse() const;
  friend bool operator==(const GroupElem&, const GroupElem&) = default;

 private:
  std::vector<Perm> parts_;
};

/// All group elements, lexicographic on the permutation words with
/// blocks varying left to right (block 1 slowest).
std::vector<GroupElem> group_elements(const BlockShape& shape);

/// Adjacent transpositions of every block (generators).
std::vector<GroupElem> group_generators(const BlockShape& shape);

/// Element of the centre ring: a polynomial in s_{k,i}, with negative
/// exponents only on the top coordinate s_{e_i,i} of each block.
struct SymCoords {
  LPoly value;

  friend bool operator==(const SymCoords&, const SymCoords&) = default;
  std::string to_string() const { return value.to_string(); }
};

/// Throws ShapeMismatch / InvalidInput when c is not a valid centre element.
void validate_sym_coords(const SymCoords& c, const BlockShape& shape);

/// X_{k,i} -> X_{g_i(k),i}; s-variables are fixed.
LPoly act(const GroupElem& g, const LPoly& p);

/// k-th elementary symmetric polynomial in the block variables; e_0 = 1.
LPoly elem_sym(const BlockShape& shape, int block, int k);

/// Orbit average (1/|W|) sum_g g.p.
LPoly reynolds(const BlockShape& shape, const LPoly& p);

/// Invariance under every adjacent transposition.
bool is_invariant(const BlockShape& shape, const LPoly& p);

/// Throws NotInvariant for non-invariant input.
SymCoords to_sym_coords(const BlockShape& shape, const LPoly& p);
LPoly from_sym_coords(const BlockShape& shape, const SymCoords& c);

/// Checks that every X variable of p lies in the shape.
void check_in_shape(const BlockShape& shape, const LPoly& p);

}  // namespace hc
