#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "heckecentre/artin.hpp"
#include "heckecentre/fiber.hpp"
#include "heckecentre/linalg.hpp"
#include "heckecentre/lpoly.hpp"
#include "heckecentre/partitions.hpp"
#include "heckecentre/permutation.hpp"
#include "heckecentre/rational.hpp"
#include "heckecentre/symmetric.hpp"

namespace hc {

/// Element of the finite Hecke algebra H_q(S_e) in the basis T_w;
/// coeffs[perm_rank(w)].
/// Quadratic relation (T_s - q)(T_s + 1) = 0.
struct FinHeckeElt {
  int e = 0;
  Rat q;
  std::vector<Rat> coeffs;

  static FinHeckeElt zero(int e, const Rat& q);
  static FinHeckeElt one(int e, const Rat& q);
  static FinHeckeElt basis(const Perm& w, const Rat& q);
  /// T_{s_i}, 1 <= i < e.
  static FinHeckeElt generator(int e, const Rat& q, int i);

  std::size_t dim() const noexcept { return coeffs.size(); }
  const Rat& coeff(const Perm& w) const;
  bool is_zero() const;
  std::string to_string() const;

  FinHeckeElt& operator+=(const FinHeckeElt& o);
  FinHeckeElt& operator-=(const FinHeckeElt& o);
  FinHeckeElt& operator*=(const Rat& c);
  friend FinHeckeElt operator+(FinHeckeElt a, const FinHeckeElt& b) { return a += b; }
  friend FinHeckeElt operator-(FinHeckeElt a, const FinHeckeElt& b) { return a -= b; }
  friend FinHeckeElt operator*(FinHeckeElt a, const Rat& c) { return a *= c; }
  friend FinHeckeElt operator*(const Rat& c, FinHeckeElt a) { return a *= c; }
  friend bool operator==(const FinHeckeElt&, const FinHeckeElt&) = default;
};

/// Throws ParameterMismatch when e or q differ.
FinHeckeElt fin_mul(const FinHeckeElt& a, const FinHeckeElt& b);
inline FinHeckeElt operator*(const FinHeckeElt& a, const FinHeckeElt& b) { return fin_mul(a, b); }

/// Matrix of left multiplication on the regular representation (columns
/// indexed by T_w).
RatMatrix fin_left_matrix(const FinHeckeElt& a);

/// L_1 = 1, L_{k+1} = q^{-1} T_k L_k T_k. Acts by q^{content} on the
/// seminormal vector of a standard tableau.
FinHeckeElt jucys_murphy(int e, const Rat& q, int k);

struct IdempotentTag {
  enum class Kind { CentralIsotypic, Primitive };
  Partition lambda;
  FinHeckeElt element;
  Kind kind = Kind::Primitive;
};

/// Idempotent of a standard tableau by content interpolation.
FinHeckeElt tableau_idempotent(const Tableau& t, const Rat& q);

/// One primitive idempotent per partition of e (row reading tableau), in
/// partitions_of order. Throws DegenerateParameter.
std::vector<IdempotentTag> primitive_idempotents(int e, const Rat& q);
/// Sum of the tableau idempotents over each shape.
std::vector<IdempotentTag> central_idempotents(int e, const Rat& q);

/// Element sum_w P_w(X) T_w of the affine Hecke algebra of GL_e, written
/// with X to the left; P_w in the variables X_{1..e,1}. coeffs[perm_rank(w)].
/// Convention: T_i X^a = X^{s_i a} T_i + (q-1)(X^a - X^{s_i a}) / (1 - X_i^{-1} X_{i+1}).
struct AffHeckeElt {
  int e = 0;
  Rat q;
  std::vector<LPoly> coeffs;

  static AffHeckeElt zero(int e, const Rat& q);
  static AffHeckeElt one(int e, const Rat& q);
  static AffHeckeElt x_power(const std::vector<int>& a, const Rat& q);
  /// P(X) T_1; P must only involve X_{1..e,1}.
  static AffHeckeElt from_poly(int e, const Rat& q, const LPoly& p);
  static AffHeckeElt from_fin(const FinHeckeElt& f);
  static AffHeckeElt basis(const std::vector<int>& a, const Perm& w, const Rat& q);

  bool is_zero() const;
  std::string to_string() const;

  AffHeckeElt& operator+=(const AffHeckeElt& o);
  AffHeckeElt& operator-=(const AffHeckeElt& o);
  AffHeckeElt& operator*=(const Rat& c);
  friend AffHeckeElt operator+(AffHeckeElt a, const AffHeckeElt& b) { return a += b; }
  friend AffHeckeElt operator-(AffHeckeElt a, const AffHeckeElt& b) { return a -= b; }
  friend AffHeckeElt operator*(AffHeckeElt a, const Rat& c) { return a *= c; }
  friend bool operator==(const AffHeckeElt&, const AffHeckeElt&) = default;
};

/// Throws ParameterMismatch.
AffHeckeElt aff_mul(const AffHeckeElt& a, const AffHeckeElt& b);
inline AffHeckeElt operator*(const AffHeckeElt& a, const AffHeckeElt& b) { return aff_mul(a, b); }

/// T_i X^a as an affine element (1 <= i < e).
AffHeckeElt t_times_x(int i, const std::vector<int>& a, const Rat& q);

/// from_sym_coords(c) commutes with every T_{s_i} and X_j^{+-1}.
bool centre_check(const SymCoords& c, int e, const Rat& q);
/// Same test for an arbitrary polynomial in X_{1..e,1}.
bool centre_check(const LPoly& p, int e, const Rat& q);

/// Products of basis elements X^nu T_w in the affine algebra, rewritten in
/// the Artin basis with coefficients in s_{k,1}, for one (e, q). Shared
/// read-only once built.
class SymbolicStructure {
 public:
  struct Entry {
    std::size_t i, j, k;
    LPoly c;
  };

  int e() const noexcept { return e_; }
  const Rat& q() const noexcept { return q_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Cached per (e, q).
  static std::shared_ptr<const SymbolicStructure> get(int e, const Rat& q);

 private:
  SymbolicStructure(int e, Rat q);
  int e_;
  Rat q_;
  std::size_t dim_;
  std::vector<Entry> entries_;
};

/// Finite-dimensional algebra given by structure constants: the affine
/// Hecke algebra tensored with the residue field of a centre point.
/// Basis index = nu_index * |S_e| + perm_rank(w) for one block; tensor
/// products of blocks index block 1 slowest.
class SpecAlgebra {
 public:
  /// Throws ShapeMismatch unless m is a single block of size e.
  static SpecAlgebra specialize(int e, const Rat& q, const CentrePoint& m);
  /// Kronecker product of per-block algebras.
  static SpecAlgebra specialize(const BlockShape& shape, const Rat& q, const CentrePoint& m);
  static SpecAlgebra tensor(const SpecAlgebra& a, const SpecAlgebra& b);

  std::size_t dim() const noexcept { return dim_; }
  const Rat& q() const noexcept { return q_; }
  const BlockShape& shape() const noexcept { return shape_; }
  const CentrePoint& point() const noexcept { return m_; }
  /// For a single block: the (nu, w) labels of the basis.
  const std::vector<std::pair<ArtinExponent, Perm>>& labels() const noexcept { return labels_; }

  /// Nonzero c_{ij}^k as (k, c) pairs.
  std::span<const std::pair<std::size_t, Rat>> product(std::size_t i, std::size_t j) const {
    const std::size_t r = i * dim_ + j;
    return {entries_.data() + start_[r], start_[r + 1] - start_[r]};
  }
  Rat constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// Elements generating the algebra (used for the centrality system).
  const std::vector<std::vector<Rat>>& generators() const noexcept { return generators_; }

  std::vector<Rat> unit() const;
  std::vector<Rat> basis_vector(std::size_t i) const;
  std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  RatMatrix left_matrix(const std::vector<Rat>& a) const;
  RatMatrix right_matrix(const std::vector<Rat>& a) const;

  /// Image of a finite Hecke element (single block).
  std::vector<Rat> embed(const FinHeckeElt& f) const;
  /// Image of a tensor product of per-block finite elements.
  std::vector<Rat> embed(const std::vector<FinHeckeElt>& per_block) const;
  /// Image of an affine element; rewrites P_w(X) at the centre point.
  std::vector<Rat> embed(const AffHeckeElt& a) const;

  bool is_associative() const;

 private:
  SpecAlgebra() = default;
  std::size_t dim_ = 0;
  Rat q_;
  BlockShape shape_;
  CentrePoint m_;
  std::vector<std::pair<ArtinExponent, Perm>> labels_;
  // CSR layout over the pairs (i, j).
  std::vector<std::size_t> start_;
  std::vector<std::pair<std::size_t, Rat>> entries_;
  std::vector<std::vector<Rat>> generators_;
};

/// dim of e1 A e2 as the rank of {e1 b e2 : b basis}.
std::size_t sandwich_dim(const std::vector<Rat>& e1, const std::vector<Rat>& e2, const SpecAlgebra& a);
std::size_t sandwich_dim(const IdempotentTag& e1, const IdempotentTag& e2, const SpecAlgebra& a);

struct SimpleVerdict {
  std::size_t centre_dim = 0;
  bool semisimple = false;
  bool matrix_algebra = false;
};

SimpleVerdict simple_check(const SpecAlgebra& a);

/// kappa(m) -> e A e, 1 -> e, is onto.
bool unit_map_surjective(const IdempotentTag& e, const SpecAlgebra& a);

struct BaseChange {
  std::size_t specialized = 0;
  std::size_t affine_first = 0;
  bool commutes() const noexcept { return specialized == affine_first; }
};

/// Sandwich rank at m computed two ways: in the specialized algebra, and
/// as e1 (X^nu T_w) e2 in the affine algebra rewritten at m afterwards.
BaseChange base_change(const IdempotentTag& e1, const IdempotentTag& e2, int e, const Rat& q, const CentrePoint& m);
bool base_change_commutes(const IdempotentTag& e1, const IdempotentTag& e2, int e, const Rat& q, const CentrePoint& m);

}  // namespace hc
