#pragma once

#include "gwl/abelian.hpp"
#include "gwl/lambda_ring.hpp"

#include <cstddef>
#include <vector>

namespace gwl {

struct AugmentationKernel {
  Subgroup subgroup;
  std::vector<GroupElement> generators;  // canonical, sorted
};

AugmentationKernel augmentation_kernel(const RingModel& m);

struct FiltrationOptions {
  std::size_t kmax = 8;
  std::size_t window = 2;
  /// Hard cap on the number of weight levels enumerated.
  std::size_t level_budget = 64;
};

/// F^0 ⊇ F^1 ⊇ ... ⊇ F^kmax in ambient coordinates.
///
/// `graded[i]` holds the invariant factors of F^i / F^{i+1} for i < kmax.
/// `stabilized_window[k]` is the least w with F^k = G_k + ... + G_{k+w}, where
/// G_w is the span of weight-w gamma-monomials.
/// `exact` is set when every gamma-monomial of weight >= `vanishing_weight`
/// is provably zero; the pieces are then independent of the window.
/// `stabilized` is false when neither exactness nor `window` consecutive
/// non-growing levels were reached within the level budget.
struct FiltrationResult {
  GroupPresentation group;
  std::vector<Subgroup> pieces;
  std::vector<IntVector> graded;
  std::vector<std::size_t> stabilized_window;
  std::vector<GroupElement> kernel_generators;
  bool exact = false;
  bool stabilized = true;
  std::size_t vanishing_weight = 0;  // meaningful only when exact
  std::size_t levels_computed = 0;
  bool witt = false;
};

FiltrationResult gamma_filtration(const RingModel& m, const FiltrationOptions& opt = {});

/// Invariant factors of F^i / F^{i+1} for i < kmax.
std::vector<IntVector> graded(const FiltrationResult& f);

/// Image of the filtration in A / <hyperbolic_gens>.  Throws
/// std::invalid_argument when the model declares no hyperbolic generators.
FiltrationResult witt_filtration(const RingModel& m, const FiltrationResult& f);

/// Weight-w level subgroups G_0..G_last, with the same stopping rule as
/// gamma_filtration; exposed for tests.
std::vector<Subgroup> gamma_levels(const RingModel& m, std::size_t count);

}  // namespace gwl
