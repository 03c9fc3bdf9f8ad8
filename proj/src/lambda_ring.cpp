#include "gwl/lambda_ring.hpp"

#include "gwl/kernels.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gwl {

std::size_t RingModel::index_of(const std::string& label) const {
  const auto& names = group.names();
  auto it = std::find(names.begin(), names.end(), label);
  if (it == names.end()) throw std::invalid_argument("model " + name + " has no basis element " + label);
  return static_cast<std::size_t>(it - names.begin());
}

GroupElement ModelRing::add(const GroupElement& a, const GroupElement& b) const {
  return model->group.add(a, b);
}
GroupElement ModelRing::sub(const GroupElement& a, const GroupElement& b) const {
  return model->group.sub(a, b);
}
GroupElement ModelRing::neg(const GroupElement& a) const { return model->group.neg(a); }
GroupElement ModelRing::mul(const GroupElement& a, const GroupElement& b) const {
  return multiply(*model, a, b);
}
GroupElement ModelRing::scale(const Int& k, const GroupElement& a) const {
  return model->group.scale(k, a);
}

GroupElement multiply(const RingModel& m, const GroupElement& x, const GroupElement& y) {
  m.group.check(x);
  m.group.check(y);
  const std::size_t n = m.rank();
  IntVector acc(n, 0);
  Int c;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      c = x[i] * y[j];
      const GroupElement& p = m.mul_table[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (p[k] != 0) acc[k] += c * p[k];
    }
  }
  return m.group.element(std::move(acc));
}

RingElement multiply(const RingElement& x, const RingElement& y) {
  if (x.model == nullptr || x.model != y.model)
    throw std::invalid_argument("multiply: elements belong to different models");
  return RingElement{x.model, multiply(*x.model, x.value, y.value)};
}

Int augment(const RingModel& m, const GroupElement& x) {
  m.group.check(x);
  Int d = 0;
  for (std::size_t i = 0; i < m.rank(); ++i) d += m.augmentation[i] * x[i];
  return d;
}

GroupElement power(const RingModel& m, const GroupElement& x, unsigned k) {
  GroupElement result = m.unit;
  for (unsigned i = 0; i < k; ++i) {
    result = multiply(m, result, x);
    if (result.is_zero()) break;
  }
  return result;
}

ModelSeries basis_lambda_series(const RingModel& m, std::size_t b, std::size_t n) {
  ModelSeries s = ModelSeries::one(ModelRing{&m}, n);
  const auto& stored = m.lambda_on_basis.at(b);
  for (std::size_t k = 1; k <= stored.size() && k <= n; ++k) s.set(k, stored[k - 1]);
  return s;
}

ModelSeries lambda_total(const RingModel& m, const GroupElement& x, std::size_t n) {
  m.group.check(x);
  ModelSeries result = ModelSeries::one(ModelRing{&m}, n);
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (x[i] == 0) continue;
    result = mul(result, pow(basis_lambda_series(m, i, n), x[i]));
  }
  return result;
}

ModelSeries lambda_total(const RingModel& m, const GroupElement& x) {
  return lambda_total(m, x, m.truncation);
}

ModelSeries gamma_total(const RingModel& m, const GroupElement& x, std::size_t n) {
  return gamma_from_lambda(lambda_total(m, x, n));
}

namespace {

void require_within_truncation(const RingModel& m, std::size_t k, const char* op) {
  if (k > m.truncation)
    throw std::out_of_range(std::string(op) + ": degree " + std::to_string(k) +
                            " exceeds model truncation " + std::to_string(m.truncation));
}

}  // namespace

GroupElement lambda_k(const RingModel& m, const GroupElement& x, std::size_t k) {
  require_within_truncation(m, k, "lambda_k");
  return lambda_total(m, x)[k];
}

GroupElement gamma_k(const RingModel& m, const GroupElement& x, std::size_t k) {
  require_within_truncation(m, k, "gamma_k");
  return gamma_total(m, x, m.truncation)[k];
}

GroupElement psi_k(const RingModel& m, const GroupElement& x, unsigned k) {
  if (k == 0) throw std::invalid_argument("psi_k: degree must be positive");
  require_within_truncation(m, k, "psi_k");
  const ModelSeries lx = lambda_total(m, x);
  std::vector<GroupElement> values(lx.coefficients().begin() + 1, lx.coefficients().begin() + 1 + k);
  return evaluate(newton_psi(k), std::span<const GroupElement>(values), ModelRing{&m});
}

// -- validation --------------------------------------------------------------

namespace {

struct Failure {
  std::string check;
  std::string detail;
};

std::string label(const RingModel& m, std::size_t i) { return m.group.names()[i]; }

std::string show(const GroupElement& x) { return to_string(x.coeffs()); }

std::optional<Failure> check_shape(const RingModel& m) {
  const std::size_t n = m.rank();
  auto canonical = [&](const GroupElement& x) {
    return x.size() == n && m.group.element(x.coeffs()) == x;
  };
  if (!canonical(m.unit)) return Failure{"shape", "unit is not a canonical element"};
  if (m.augmentation.size() != n) return Failure{"shape", "augmentation length differs from rank"};
  if (m.mul_table.size() != n) return Failure{"shape", "multiplication table has wrong row count"};
  for (std::size_t i = 0; i < n; ++i) {
    if (m.mul_table[i].size() != n) return Failure{"shape", "multiplication table row " + label(m, i) + " has wrong length"};
    for (std::size_t j = 0; j < n; ++j)
      if (!canonical(m.mul_table[i][j]))
        return Failure{"shape", "product " + label(m, i) + "*" + label(m, j) + " is not canonical"};
  }
  if (m.lambda_on_basis.size() != n) return Failure{"shape", "lambda table has wrong length"};
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : m.lambda_on_basis[i])
      if (!canonical(v)) return Failure{"shape", "lambda entry of " + label(m, i) + " is not canonical"};
  if (m.hyperbolic_gens)
    for (const auto& h : *m.hyperbolic_gens)
      if (!canonical(h)) return Failure{"shape", "hyperbolic generator is not canonical"};
  if (m.truncation < 1) return Failure{"shape", "truncation must be at least 1"};
  return std::nullopt;
}

std::optional<Failure> check_commutativity(const RingModel& m) {
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j)
      if (!(m.mul_table[i][j] == m.mul_table[j][i]))
        return Failure{"commutativity", label(m, i) + "*" + label(m, j) + " != " + label(m, j) + "*" + label(m, i)};
  return std::nullopt;
}

std::optional<Failure> check_unit(const RingModel& m) {
  for (std::size_t i = 0; i < m.rank(); ++i)
    if (!(multiply(m, m.unit, m.basis(i)) == m.basis(i)))
      return Failure{"unit", "unit*" + label(m, i) + " = " + show(multiply(m, m.unit, m.basis(i)))};
  return std::nullopt;
}

std::optional<Failure> check_associativity(const RingModel& m) {
  const std::size_t n = m.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        GroupElement lhs = multiply(m, m.mul_table[i][j], m.basis(k));
        GroupElement rhs = multiply(m, m.basis(i), m.mul_table[j][k]);
        if (!(lhs == rhs))
          return Failure{"associativity", "(" + label(m, i) + "*" + label(m, j) + ")*" + label(m, k) +
                                              " = " + show(lhs) + " but " + label(m, i) + "*(" +
                                              label(m, j) + "*" + label(m, k) + ") = " + show(rhs)};
      }
  return std::nullopt;
}

std::optional<Failure> check_torsion(const RingModel& m) {
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const Int& o = m.group.orders()[i];
    if (o == 0) continue;
    if (m.augmentation[i] != 0)
      return Failure{"torsion", "augmentation of torsion element " + label(m, i) + " is non-zero"};
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (!m.group.scale(o, m.mul_table[i][j]).is_zero())
        return Failure{"torsion", "order of " + label(m, i) + " does not annihilate " + label(m, i) + "*" + label(m, j)};
  }
  return std::nullopt;
}

std::optional<Failure> check_augmentation(const RingModel& m) {
  if (augment(m, m.unit) != 1) return Failure{"augmentation", "d(unit) != 1"};
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (augment(m, m.mul_table[i][j]) != m.augmentation[i] * m.augmentation[j])
        return Failure{"augmentation", "d(" + label(m, i) + "*" + label(m, j) + ") != d(" + label(m, i) +
                                           ")d(" + label(m, j) + ")"};
  return std::nullopt;
}

std::optional<Failure> check_lambda1(const RingModel& m) {
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const auto& s = m.lambda_on_basis[i];
    if (s.empty() || !(s[0] == m.basis(i))) return Failure{"lambda1", "lambda^1(" + label(m, i) + ") != " + label(m, i)};
  }
  return std::nullopt;
}

std::optional<Failure> check_lambda_augmentation(const RingModel& m) {
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const auto& s = m.lambda_on_basis[i];
    const Int& d = m.augmentation[i];
    std::size_t top = s.size();
    if (d > 0 && d.fits_ulong_p()) top = std::max<std::size_t>(top, d.get_ui());
    top = std::min(top, m.truncation);
    for (std::size_t k = 1; k <= top; ++k) {
      const Int got = k <= s.size() ? augment(m, s[k - 1]) : Int(0);
      if (got != binomial(d, static_cast<long>(k)))
        return Failure{"lambda_augmentation", "d(lambda^" + std::to_string(k) + "(" + label(m, i) + ")) = " +
                                                  got.get_str() + ", expected " +
                                                  binomial(d, static_cast<long>(k)).get_str()};
    }
  }
  return std::nullopt;
}

std::optional<Failure> check_lambda_torsion(const RingModel& m) {
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const Int& o = m.group.orders()[i];
    if (o == 0) continue;
    const ModelSeries s = pow(basis_lambda_series(m, i, m.truncation), o);
    if (!(s == ModelSeries::one(ModelRing{&m}, m.truncation)))
      return Failure{"lambda_torsion", "lambda_t(" + label(m, i) + ")^" + o.get_str() + " != 1"};
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate_model(const RingModel& m) {
  using Check = std::optional<Failure> (*)(const RingModel&);
  static const std::pair<const char*, Check> checks[] = {
      {"shape", check_shape},
      {"commutativity", check_commutativity},
      {"unit", check_unit},
      {"associativity", check_associativity},
      {"torsion", check_torsion},
      {"augmentation", check_augmentation},
      {"lambda1", check_lambda1},
      {"lambda_augmentation", check_lambda_augmentation},
      {"lambda_torsion", check_lambda_torsion},
  };
  ValidationReport report;
  if (m.group.rank() == 0) {
    report.ok = false;
    report.failed_check = "shape";
    report.detail = "empty basis";
    return report;
  }
  for (const auto& [name, fn] : checks) {
    if (auto f = fn(m)) {
      report.ok = false;
      report.failed_check = f->check;
      report.detail = f->detail;
      return report;
    }
    report.passed.emplace_back(name);
  }
  return report;
}

// -- special axioms ----------------------------------------------------------

bool SpecialReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

SpecialReport verify_special_pair(const RingModel& m, const GroupElement& x, const GroupElement& y,
                                  unsigned bound, const UniversalBounds& limits) {
  const ModelRing ring{&m};
  const std::size_t trunc = m.truncation;
  require_within_truncation(m, std::max<std::size_t>(bound, std::min(bound * bound, limits.max_compose_weight)),
                            "verify_special_pair");
  const ModelSeries lx = lambda_total(m, x, trunc);
  const ModelSeries ly = lambda_total(m, y, trunc);
  const ModelSeries lxy = lambda_total(m, multiply(m, x, y), trunc);

  SpecialReport report;
  for (unsigned n = 1; n <= bound; ++n) {
    const MultiPoly p = product_universal(n, limits);
    std::vector<GroupElement> values;
    for (unsigned i = 1; i <= n; ++i) values.push_back(lx[i]);
    for (unsigned i = 1; i <= n; ++i) values.push_back(ly[i]);
    const GroupElement rhs = evaluate(p, std::span<const GroupElement>(values), ring);
    report.checks.push_back({"P_" + std::to_string(n) + "(x,y)", lxy[n] == rhs});
  }

  auto compose_checks = [&](const ModelSeries& lz, const char* which) {
    for (unsigned mo = 2; mo <= bound; ++mo)
      for (unsigned ni = 2; ni <= bound; ++ni) {
        if (mo * ni > limits.max_compose_weight) continue;
        const MultiPoly p = compose_universal(mo, ni, limits);
        std::vector<GroupElement> values(lz.coefficients().begin() + 1,
                                         lz.coefficients().begin() + 1 + mo * ni);
        const GroupElement rhs = evaluate(p, std::span<const GroupElement>(values), ring);
        const GroupElement lhs = lambda_total(m, lz[ni], trunc)[mo];
        report.checks.push_back({"P_{" + std::to_string(mo) + "," + std::to_string(ni) + "}(" + which + ")",
                                 lhs == rhs});
      }
  };
  compose_checks(lx, "x");
  if (!(x == y)) compose_checks(ly, "y");
  return report;
}

// -- line elements and torsion -----------------------------------------------

std::vector<GroupElement> line_elements(const RingModel& m) {
  std::vector<GroupElement> kept;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    GroupElement cand;
    if (m.augmentation[i] == 1) cand = m.basis(i);
    else if (m.augmentation[i] == 0) cand = m.group.add(m.unit, m.basis(i));
    else continue;
    ModelSeries expected = ModelSeries::one(ModelRing{&m}, m.truncation);
    expected.set(1, cand);
    if (lambda_total(m, cand) == expected && multiply(m, cand, cand) == m.unit) kept.push_back(cand);
  }
  std::set<GroupElement> group{m.unit};
  group.insert(kept.begin(), kept.end());
  constexpr std::size_t cap = 1u << 12;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<GroupElement> current(group.begin(), group.end());
    for (const auto& a : current)
      for (const auto& b : kept)
        if (group.insert(multiply(m, a, b)).second) grew = true;
    if (group.size() > cap) throw std::runtime_error("line_elements: closure exceeds size cap");
  }
  return {group.begin(), group.end()};
}

std::vector<GroupElement> torsion_elements(const RingModel& m, std::size_t limit) {
  std::vector<std::size_t> coords;
  std::vector<unsigned long> radix;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const Int& o = m.group.orders()[i];
    if (o == 0) continue;
    if (!o.fits_ulong_p() || o.get_ui() > limit || total > limit / o.get_ui())
      throw std::length_error("torsion subgroup of " + m.name + " exceeds enumeration limit");
    coords.push_back(i);
    radix.push_back(o.get_ui());
    total *= o.get_ui();
  }
  std::vector<GroupElement> out;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    IntVector v(m.rank(), 0);
    std::size_t rest = idx;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      v[coords[c]] = static_cast<unsigned long>(rest % radix[c]);
      rest /= radix[c];
    }
    out.push_back(m.group.element(std::move(v)));
  }
  return out;
}

ClauwensReport clauwens_check(const RingModel& m) {
  const auto elements = torsion_elements(m);
  return kernels::clauwens_scan_parallel(m, elements);
}

}  // namespace gwl
