#include "gwl/filtration.hpp"

#include "gwl/kernels.hpp"
#include "gwl/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwl {

AugmentationKernel augmentation_kernel(const RingModel& m) {
  IntMatrix images;
  for (const auto& d : m.augmentation) images.push_back({d});
  Subgroup s = subgroup_from_lattice(m.group, integer_kernel(images, 1));
  auto gens = s.generators();
  std::sort(gens.begin(), gens.end());
  return {std::move(s), std::move(gens)};
}

namespace {

std::vector<GroupElement> sorted_unique(std::vector<GroupElement> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Enumerates G_w = span{ gamma^i(e) * g : e in E, 1 <= i <= w, g in G_{w-i} }.
class LevelEngine {
 public:
  LevelEngine(const RingModel& m, const std::vector<GroupElement>& kernel_gens) : m_(m) {
    const std::size_t n = m.truncation;
    factors_.assign(n + 1, {});
    for (const auto& e : kernel_gens) {
      const ModelSeries g = gamma_total(m, e, n);
      for (std::size_t i = 1; i <= n; ++i)
        if (!g[i].is_zero()) factors_[i].push_back(g[i]);
    }
    for (std::size_t i = 1; i <= n; ++i) {
      factors_[i] = sorted_unique(std::move(factors_[i]));
      if (!factors_[i].empty()) max_weight_ = i;
    }
    const GroupElement unit[] = {m.unit};
    push(subgroup_from_generators(m.group, unit));
  }

  /// Largest i with a non-zero gamma^i(e); only meaningful below the truncation.
  std::size_t max_factor_weight() const { return max_weight_; }
  bool factor_weight_certified() const { return max_weight_ < m_.truncation; }

  const Subgroup& next() {
    const std::size_t w = levels_.size();
    std::vector<GroupElement> gens;
    for (std::size_t i = 1; i <= std::min(w, max_weight_); ++i) {
      if (factors_[i].empty() || gens_[w - i].empty()) continue;
      auto prods = kernels::pairwise_products(m_, factors_[i], gens_[w - i]);
      gens.insert(gens.end(), prods.begin(), prods.end());
    }
    gens = sorted_unique(std::move(gens));
    return push(subgroup_from_generators(m_.group, gens));
  }

  const std::vector<Subgroup>& levels() const { return levels_; }

 private:
  const Subgroup& push(Subgroup s) {
    gens_.push_back(s.generators());
    levels_.push_back(std::move(s));
    return levels_.back();
  }

  const RingModel& m_;
  std::vector<std::vector<GroupElement>> factors_;  // by weight i
  std::size_t max_weight_ = 0;
  std::vector<Subgroup> levels_;
  std::vector<std::vector<GroupElement>> gens_;
};

}  // namespace

std::vector<Subgroup> gamma_levels(const RingModel& m, std::size_t count) {
  LevelEngine engine(m, augmentation_kernel(m).generators);
  while (engine.levels().size() < count) engine.next();
  auto levels = engine.levels();
  levels.resize(count, zero_subgroup(m.group));
  return levels;
}

FiltrationResult gamma_filtration(const RingModel& m, const FiltrationOptions& opt) {
  if (opt.kmax < 1) throw std::invalid_argument("gamma_filtration: kmax must be at least 1");
  if (opt.window < 1) throw std::invalid_argument("gamma_filtration: window must be at least 1");

  FiltrationResult out;
  out.group = m.group;
  out.kernel_generators = augmentation_kernel(m).generators;
  LevelEngine engine(m, out.kernel_generators);
  const std::size_t g = engine.max_factor_weight();

  if (g == 0) {
    out.exact = true;
    out.vanishing_weight = 1;
  } else {
    std::size_t zero_run = 0;
    std::size_t non_growing = 0;
    bool window_reached = false;
    std::size_t extra = 0;
    Subgroup top = zero_subgroup(m.group);
    while (engine.levels().size() < opt.level_budget) {
      const std::size_t w = engine.levels().size();
      const Subgroup& level = engine.next();
      zero_run = level.is_trivial() ? zero_run + 1 : 0;
      if (engine.factor_weight_certified() && zero_run >= g) {
        out.exact = true;
        out.vanishing_weight = w + 1 - g;
        break;
      }
      if (w >= opt.kmax && !window_reached) {
        Subgroup grown = subgroup_sum(top, level);
        non_growing = (w > opt.kmax && subgroups_equal(grown, top)) ? non_growing + 1 : 0;
        top = std::move(grown);
        if (non_growing >= opt.window) window_reached = true;
      }
      // A few more levels give exactness a chance to be certified.
      if (window_reached && ++extra > g) break;
    }
    out.stabilized = out.exact || window_reached;
  }

  const auto& levels = engine.levels();
  std::size_t used = levels.size();
  if (out.exact) used = std::min(used, out.vanishing_weight);
  out.levels_computed = levels.size();

  out.pieces.assign(opt.kmax + 1, zero_subgroup(m.group));
  Subgroup acc = zero_subgroup(m.group);
  for (std::size_t w = used; w-- > 0;) {
    acc = subgroup_sum(acc, levels[w]);
    if (w <= opt.kmax) out.pieces[w] = acc;
  }

  out.stabilized_window.assign(opt.kmax + 1, 0);
  for (std::size_t k = 0; k <= opt.kmax && k < used; ++k) {
    Subgroup partial = zero_subgroup(m.group);
    for (std::size_t w = k; w < used; ++w) {
      partial = subgroup_sum(partial, levels[w]);
      if (subgroups_equal(partial, out.pieces[k])) {
        out.stabilized_window[k] = w - k;
        break;
      }
    }
  }
  out.graded = graded(out);
  return out;
}

std::vector<IntVector> graded(const FiltrationResult& f) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i + 1 < f.pieces.size(); ++i)
    out.push_back(relative_invariants(f.pieces[i], f.pieces[i + 1]));
  return out;
}

FiltrationResult witt_filtration(const RingModel& m, const FiltrationResult& f) {
  if (!m.hyperbolic_gens)
    throw std::invalid_argument("witt_filtration: model " + m.name + " declares no hyperbolic generators");
  const QuotientMap q(m.group, subgroup_from_generators(m.group, *m.hyperbolic_gens));
  FiltrationResult out = f;
  out.group = q.target();
  out.witt = true;
  out.pieces.clear();
  for (const auto& p : f.pieces) out.pieces.push_back(q.image(p));
  out.kernel_generators.clear();
  for (const auto& e : f.kernel_generators) {
    GroupElement x = q.apply(e);
    if (!x.is_zero()) out.kernel_generators.push_back(std::move(x));
  }
  out.kernel_generators = sorted_unique(std::move(out.kernel_generators));
  out.graded = graded(out);
  return out;
}

}  // namespace gwl
