#pragma once

#include "gwl/abelian.hpp"
#include "gwl/series.hpp"
#include "gwl/symfunc.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gwl {

/// A finitely presented augmented pre-lambda-ring.
///
/// `mul_table[i][j]` is the product of basis elements i and j and is stored
/// in full (both triangles).  `lambda_on_basis[b][k-1]` is lambda^k(b) for
/// k = 1..D_b; higher lambda-powers of b vanish.
struct RingModel {
  std::string name;
  GroupPresentation group;
  GroupElement unit;
  std::vector<std::vector<GroupElement>> mul_table;
  IntVector augmentation;
  std::vector<std::vector<GroupElement>> lambda_on_basis;
  std::optional<std::vector<GroupElement>> hyperbolic_gens;
  std::size_t truncation = default_truncation;

  std::size_t rank() const { return group.rank(); }
  GroupElement basis(std::size_t i) const { return group.basis(i); }
  /// Index of the basis label, or throws std::invalid_argument.
  std::size_t index_of(const std::string& label) const;
};

/// Coefficient arithmetic of a model, for TruncSeries and evaluate().
/// Two ModelRings compare equal when they refer to the same model object.
struct ModelRing {
  const RingModel* model = nullptr;
  using value_type = GroupElement;
  GroupElement zero() const { return model->group.zero(); }
  GroupElement one() const { return model->unit; }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const Int& k, const GroupElement& a) const;
  bool is_zero(const GroupElement& a) const { return a.is_zero(); }
  friend bool operator==(const ModelRing& a, const ModelRing& b) { return a.model == b.model; }
};

using ModelSeries = TruncSeries<ModelRing>;

/// An element bound to its model.  The model must outlive the element.
struct RingElement {
  const RingModel* model = nullptr;
  GroupElement value;
};

GroupElement multiply(const RingModel& m, const GroupElement& x, const GroupElement& y);
RingElement multiply(const RingElement& x, const RingElement& y);

/// Integer augmentation d(x).
Int augment(const RingModel& m, const GroupElement& x);

/// lambda_t(b) for a basis element, from the stored table.
ModelSeries basis_lambda_series(const RingModel& m, std::size_t b, std::size_t n);

/// prod_i lambda_t(b_i)^{n_i} over the basis decomposition of x, truncated at n.
ModelSeries lambda_total(const RingModel& m, const GroupElement& x, std::size_t n);
ModelSeries lambda_total(const RingModel& m, const GroupElement& x);
ModelSeries gamma_total(const RingModel& m, const GroupElement& x, std::size_t n);

GroupElement lambda_k(const RingModel& m, const GroupElement& x, std::size_t k);
GroupElement gamma_k(const RingModel& m, const GroupElement& x, std::size_t k);
/// newton_psi(k) evaluated at e_i = lambda^i(x).
GroupElement psi_k(const RingModel& m, const GroupElement& x, unsigned k);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> passed;
  std::string failed_check;  // empty when ok
  std::string detail;
};

/// Finite checks, in order: shape, commutativity, unit, associativity,
/// torsion, augmentation, lambda1, lambda_augmentation, lambda_torsion.
/// Stops at the first violated check.
ValidationReport validate_model(const RingModel& m);

struct IdentityCheck {
  std::string identity;
  bool holds = false;
};

struct SpecialReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

/// Checks lambda^n(xy) = P_n(lambda(x), lambda(y)) for 1 <= n <= bound, and
/// lambda^m(lambda^n(z)) = P_{m,n}(lambda(z)) for z in {x, y}, 2 <= m, n <=
/// bound, m*n within the symfunc weight bound.
SpecialReport verify_special_pair(const RingModel& m, const GroupElement& x,
                                  const GroupElement& y, unsigned bound = 3,
                                  const UniversalBounds& limits = {});

/// Multiplicative group generated by the basis line elements: candidates are
/// basis elements b with d(b) = 1 and unit + b for d(b) = 0, kept when
/// lambda_t(x) = 1 + xt and x^2 = 1.  Sorted.
std::vector<GroupElement> line_elements(const RingModel& m);

/// Every element of the torsion subgroup (all coordinates of finite order),
/// in mixed-radix order.  Throws if it has more than `limit` elements.
std::vector<GroupElement> torsion_elements(const RingModel& m, std::size_t limit = 1u << 20);

struct ClauwensReport {
  std::size_t checked = 0;                 // elements of prime-power order
  std::vector<GroupElement> violations;    // sorted
};

/// x^{p^e + p^{e-1}} = 0 for every torsion element x of order p^e.
ClauwensReport clauwens_check(const RingModel& m);

/// x^k by repeated multiplication; x^0 is the unit.
GroupElement power(const RingModel& m, const GroupElement& x, unsigned k);

}  // namespace gwl
