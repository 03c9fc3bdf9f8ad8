#pragma once

#include "gwl/integer.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gwl {

/// Element of a finitely generated abelian group, as a coefficient vector in
/// the presentation's basis.  Elements produced by GroupPresentation are
/// canonical: torsion coordinates lie in [0, order).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(IntVector coeffs) : coeffs_(std::move(coeffs)) {}

  const IntVector& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const { return gwl::is_zero(coeffs_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.coeffs_ < b.coeffs_;
  }

 private:
  IntVector coeffs_;
};

/// (+)_i Z/orders[i], with 0 standing for an infinite cyclic summand.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  GroupPresentation(IntVector orders, std::vector<std::string> names);

  static GroupPresentation free_abelian(std::size_t rank);

  std::size_t rank() const { return orders_.size(); }
  const IntVector& orders() const { return orders_; }
  const std::vector<std::string>& names() const { return names_; }
  bool is_torsion_coordinate(std::size_t i) const { return orders_[i] != 0; }

  /// Rows orders[i] * e_i for every finite order.
  IntMatrix relations() const;

  /// Reduces raw coefficients into canonical form.
  GroupElement element(IntVector coeffs) const;
  GroupElement zero() const;
  GroupElement basis(std::size_t i) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(const Int& k, const GroupElement& a) const;

  /// Additive order of x; 0 when x has infinite order.
  Int element_order(const GroupElement& x) const;

  /// Throws std::invalid_argument unless x has `rank()` coordinates.
  void check(const GroupElement& x) const;

  friend bool operator==(const GroupPresentation& a, const GroupPresentation& b) {
    return a.orders_ == b.orders_ && a.names_ == b.names_;
  }

 private:
  IntVector orders_;
  std::vector<std::string> names_;
};

/// A subgroup, stored as the Hermite normal form of its preimage lattice in
/// the free cover Z^rank (generators plus the relation lattice).  Equal
/// subgroups have identical matrices.
class Subgroup {
 public:
  const GroupPresentation& presentation() const { return pres_; }
  const IntMatrix& matrix() const { return hnf_; }

  /// Rank of the lattice in the free cover, relations included.
  std::size_t lattice_rank() const { return hnf_.size(); }

  /// Canonical (reduced, non-zero, deduplicated) generators in the group.
  std::vector<GroupElement> generators() const;

  bool is_trivial() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.pres_ == b.pres_ && a.hnf_ == b.hnf_;
  }

 private:
  friend Subgroup subgroup_from_lattice(const GroupPresentation& pres, IntMatrix rows);
  GroupPresentation pres_;
  IntMatrix hnf_;
};

Subgroup subgroup_from_generators(const GroupPresentation& pres,
                                  std::span<const GroupElement> gens);
/// Subgroup spanned by raw lattice rows (relations are added automatically).
Subgroup subgroup_from_lattice(const GroupPresentation& pres, IntMatrix rows);
Subgroup zero_subgroup(const GroupPresentation& pres);
Subgroup whole_group(const GroupPresentation& pres);
Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);

bool contains(const Subgroup& s, const GroupElement& x);
bool contains(const Subgroup& big, const Subgroup& small);
bool subgroups_equal(const Subgroup& a, const Subgroup& b);

/// Invariant factors of pres / s: torsion factors d1 | d2 | ... (ones dropped)
/// followed by a 0 for each free summand.
IntVector quotient_invariants(const GroupPresentation& pres, const Subgroup& s);

/// Invariant factors of big / small; throws if small is not contained in big.
IntVector relative_invariants(const Subgroup& big, const Subgroup& small);

/// Order of a finite group given by invariant factors; 0 if any factor is free.
Int group_order(const IntVector& invariants);

/// The projection pres -> pres / killed, with the target re-presented in
/// Smith coordinates (trivial summands removed).
class QuotientMap {
 public:
  QuotientMap(const GroupPresentation& source, const Subgroup& killed);

  const GroupPresentation& source() const { return source_; }
  const GroupPresentation& target() const { return target_; }
  GroupElement apply(const GroupElement& x) const;
  Subgroup image(const Subgroup& s) const;

 private:
  GroupPresentation source_;
  GroupPresentation target_;
  IntMatrix right_;                 // Smith column transform
  std::vector<std::size_t> kept_;   // Smith coordinates with factor != 1
};

}  // namespace gwl
