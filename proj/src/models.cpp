#include "gwl/models.hpp"

#include <stdexcept>

namespace gwl {

namespace {

// Group, unit (basis 0), zero multiplication table and lambda^1 = id.
RingModel skeleton(std::string name, IntVector orders, std::vector<std::string> names,
                   IntVector augmentation, std::size_t truncation) {
  RingModel m;
  m.name = std::move(name);
  m.group = GroupPresentation(std::move(orders), std::move(names));
  m.truncation = truncation;
  const std::size_t n = m.rank();
  m.unit = m.basis(0);
  m.augmentation = std::move(augmentation);
  m.mul_table.assign(n, std::vector<GroupElement>(n, m.group.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    m.mul_table[0][i] = m.basis(i);
    m.mul_table[i][0] = m.basis(i);
  }
  m.lambda_on_basis.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) m.lambda_on_basis[i] = {m.basis(i)};
  return m;
}

void set_product(RingModel& m, std::size_t i, std::size_t j, const GroupElement& v) {
  m.mul_table[i][j] = v;
  m.mul_table[j][i] = v;
}

GroupElement combo(const RingModel& m, std::initializer_list<std::pair<std::size_t, long>> terms) {
  IntVector v(m.rank(), 0);
  for (const auto& [i, c] : terms) v[i] += c;
  return m.group.element(std::move(v));
}

// Coefficients 1..D of a unit series, dropping trailing zeros.
std::vector<GroupElement> lambda_entries(const ModelSeries& s) {
  std::vector<GroupElement> out(s.coefficients().begin() + 1, s.coefficients().end());
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

ModelSeries poly_series(const RingModel& m, std::size_t n, std::vector<GroupElement> coeffs) {
  return ModelSeries::from_coefficients(ModelRing{&m}, n, std::move(coeffs));
}

// 1 + x t / (1 + t)^2, the lambda-series of an H(line - 1) class.
ModelSeries hyperbolic_line_series(const RingModel& m, const GroupElement& x) {
  const std::size_t n = m.truncation;
  ModelSeries s = ModelSeries::one(ModelRing{&m}, n);
  for (std::size_t k = 1; k <= n; ++k)
    s.set(k, m.group.scale(Int((k % 2 == 1) ? static_cast<long>(k) : -static_cast<long>(k)), x));
  return s;
}

// (1 + (1 + x) t) / (1 + t), the lambda-series of a line-minus-one class.
ModelSeries line_minus_one_series(const RingModel& m, const GroupElement& x) {
  const std::size_t n = m.truncation;
  const ModelSeries num = poly_series(m, n, {m.unit, m.group.add(m.unit, x)});
  const ModelSeries den = poly_series(m, n, {m.unit, m.unit});
  return mul(num, inverse(den));
}

}  // namespace

PointBase parse_base(const std::string& s) {
  if (s == "C") return PointBase::C;
  if (s == "R") return PointBase::R;
  throw std::invalid_argument("base must be C or R, got '" + s + "'");
}

std::string to_string(PointBase b) { return b == PointBase::C ? "C" : "R"; }

RingModel gw_point(PointBase base, std::size_t truncation) {
  if (base == PointBase::C) {
    RingModel m = skeleton("gw_point_C", {0}, {"1"}, {1}, truncation);
    m.hyperbolic_gens = std::vector<GroupElement>{combo(m, {{0, 2}})};
    return m;
  }
  RingModel m = skeleton("gw_point_R", {0, 0}, {"1", "L"}, {1, 1}, truncation);
  set_product(m, 1, 1, m.unit);
  m.hyperbolic_gens = std::vector<GroupElement>{combo(m, {{0, 1}, {1, 1}})};
  return m;
}

unsigned projective_rho(unsigned r) { return (r + 1) / 2; }

RingModel gw_projective(PointBase base, unsigned r, std::size_t truncation) {
  if (r < 1 || r > max_projective_dimension)
    throw std::out_of_range("gw_projective: r must lie in [1, " + std::to_string(max_projective_dimension) + "]");
  const RingModel point = gw_point(base, truncation);
  const unsigned rho = projective_rho(r);
  const unsigned top = (r % 4 == 3) ? rho - 1 : rho;
  const std::size_t nb = point.rank();

  IntVector orders = point.group.orders();
  std::vector<std::string> names = point.group.names();
  IntVector aug = point.augmentation;
  for (unsigned i = 1; i <= top; ++i) {
    orders.push_back((i == rho && r % 4 == 1) ? 2 : 0);
    names.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
    aug.push_back(0);
  }
  RingModel m = skeleton("gw_projective_" + to_string(base) + "_r" + std::to_string(r), orders, names,
                         aug, truncation);
  auto lift = [&](const GroupElement& x) {
    IntVector v(m.rank(), 0);
    for (std::size_t i = 0; i < nb; ++i) v[i] = x[i];
    return m.group.element(std::move(v));
  };
  auto a_pow = [&](unsigned i) { return m.basis(nb + i - 1); };

  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) m.mul_table[i][j] = lift(point.mul_table[i][j]);
  for (std::size_t i = 0; i < nb; ++i)
    for (unsigned j = 1; j <= top; ++j) set_product(m, i, nb + j - 1, m.group.scale(point.augmentation[i], a_pow(j)));
  for (unsigned i = 1; i <= top; ++i)
    for (unsigned j = 1; j <= top; ++j)
      m.mul_table[nb + i - 1][nb + j - 1] = (i + j <= top) ? a_pow(i + j) : m.group.zero();
  for (std::size_t i = 0; i < nb; ++i) {
    m.lambda_on_basis[i].clear();
    for (const auto& v : point.lambda_on_basis[i]) m.lambda_on_basis[i].push_back(lift(v));
  }

  // lambda_t(a) = lambda_t(H O(1)) / lambda_t(H 1).
  const std::size_t n = truncation;
  const GroupElement h1 = base == PointBase::C ? combo(m, {{0, 2}}) : combo(m, {{0, 1}, {1, 1}});
  const GroupElement minus_one = base == PointBase::C ? m.unit : m.basis(1);
  if (top >= 1) {
    const GroupElement a = a_pow(1);
    const ModelSeries num = poly_series(m, n, {m.unit, m.group.add(a, h1), minus_one});
    const ModelSeries den = poly_series(m, n, {m.unit, h1, minus_one});
    m.lambda_on_basis[nb] = lambda_entries(mul(num, inverse(den)));
  }
  const auto ak = ak_sequence(m, top);
  for (unsigned j = 2; j <= top; ++j) {
    ModelSeries s = hyperbolic_line_series(m, ak[j]);
    for (unsigned i = 1; i < j; ++i) {
      const Int& c = ak[j][nb + i - 1];
      if (c != 0) s = mul(s, pow(basis_lambda_series(m, nb + i - 1, n), Int(-c)));
    }
    m.lambda_on_basis[nb + j - 1] = lambda_entries(s);
  }

  std::vector<GroupElement> hyp;
  for (unsigned i = 1; i <= top; ++i) hyp.push_back(a_pow(i));
  for (const auto& h : *point.hyperbolic_gens) hyp.push_back(lift(h));
  m.hyperbolic_gens = std::move(hyp);
  return m;
}

std::vector<GroupElement> ak_sequence(const RingModel& m, std::size_t kmax) {
  const std::size_t ia = m.index_of("a");
  const GroupElement a = m.basis(ia);
  const GroupElement two = m.group.scale(2, m.unit);
  const GroupElement a_plus_2 = m.group.add(a, two);
  const GroupElement two_a = m.group.scale(2, a);
  std::vector<GroupElement> out{m.group.zero(), a};
  while (out.size() <= kmax) {
    const std::size_t k = out.size();
    GroupElement next = multiply(m, a_plus_2, out[k - 1]);
    next = m.group.sub(next, out[k - 2]);
    next = m.group.add(next, two_a);
    out.push_back(std::move(next));
  }
  out.resize(kmax + 1);
  return out;
}

AkReport check_ak_recursion(const RingModel& m, unsigned r, std::size_t kmax) {
  AkReport rep;
  const unsigned rho = projective_rho(r);
  rep.a = ak_sequence(m, std::max<std::size_t>(kmax, rho));
  const std::size_t ia = m.index_of("a");
  const std::size_t top = m.rank() - ia;
  for (std::size_t k = 1; k < rep.a.size(); ++k) {
    for (std::size_t i = 0; i < ia; ++i)
      if (rep.a[k][i] != 0) rep.zero_constant_term = false;
    if (k <= top && rep.a[k][ia + k - 1] != 1) rep.monic = false;
  }
  if (r % 2 == 1) {
    GroupElement h = m.group.zero();
    for (unsigned j = 1; j <= rho; ++j) {
      Int c = binomial(Int(r + 1), static_cast<long>(rho - j));
      if (j % 2 == 1) c = -c;
      h = m.group.add(h, m.group.scale(c, rep.a[j]));
    }
    rep.h = h;
    rep.minus_a_power = power(m, m.group.neg(m.basis(ia)), rho);
    rep.h_identity = rep.h == rep.minus_a_power;
  }
  rep.a.resize(kmax + 1);
  return rep;
}

RingModel gw_punctured_line(std::size_t truncation) {
  RingModel m = skeleton("gw_punctured_line_R", {0, 0, 0}, {"1", "L", "eps"}, {1, 1, 0}, truncation);
  set_product(m, 1, 1, m.unit);
  set_product(m, 1, 2, combo(m, {{2, -1}}));
  set_product(m, 2, 2, combo(m, {{2, -2}}));
  m.lambda_on_basis[2] = lambda_entries(line_minus_one_series(m, m.basis(2)));
  m.hyperbolic_gens = std::vector<GroupElement>{combo(m, {{0, 1}, {1, 1}})};
  return m;
}

IntVector a5_gamma_coefficients(unsigned f, std::size_t n) {
  if (f < 2) throw std::invalid_argument("gw_punctured_a5: f must be at least 2");
  Int top;
  mpz_ui_pow_ui(top.get_mpz_t(), 2, f - 1);
  // gamma^0 = 1, so c_0 is fixed to 1.
  IntVector c{Int(1)};
  for (std::size_t i = 1; i <= n; ++i) {
    Int v = binomial(top, static_cast<long>(i));
    if (i >= f) {
      v <<= static_cast<mp_bitcnt_t>(i - f);
    } else {
      const Int d = Int(1) << static_cast<mp_bitcnt_t>(f - i);
      if (v % d != 0) throw std::logic_error("a5_gamma_coefficients: c_" + std::to_string(i) + " is not an integer");
      v /= d;
    }
    c.push_back(v);
  }
  return c;
}

RingModel gw_punctured_a5(unsigned f, std::size_t truncation) {
  const IntVector c = a5_gamma_coefficients(f, truncation);
  const IntVector reference = a5_gamma_coefficients(2, truncation);
  if (f <= 6)
    for (std::size_t i = 1; i <= truncation; ++i)
      if (mod_nonneg(c[i], 2) != mod_nonneg(reference[i], 2))
        throw std::logic_error("gw_punctured_a5: c_" + std::to_string(i) + " mod 2 depends on f");

  RingModel m = skeleton("gw_punctured_a5_f" + std::to_string(f), {0, 2}, {"1", "eps"}, {1, 0}, truncation);
  const GroupElement eps = m.basis(1);
  ModelSeries gamma = ModelSeries::one(ModelRing{&m}, truncation);
  for (std::size_t i = 1; i <= truncation; ++i) gamma.set(i, m.group.scale(c[i], eps));
  m.lambda_on_basis[1] = lambda_entries(lambda_from_gamma(gamma));
  m.hyperbolic_gens = std::vector<GroupElement>{combo(m, {{0, 2}})};
  return m;
}

RingModel gw_surface_cxp1(unsigned s, std::size_t truncation) {
  IntVector orders{0};
  std::vector<std::string> names{"1"};
  for (unsigned j = 1; j <= s; ++j) {
    orders.push_back(2);
    names.push_back("a" + std::to_string(j));
  }
  const std::size_t ib = names.size();
  orders.push_back(2);
  names.push_back("b");
  const std::size_t ic = names.size();
  orders.push_back(2);
  names.push_back("c");
  const std::size_t id0 = names.size();
  orders.push_back(0);
  names.push_back("d0");
  for (unsigned j = 1; j <= s; ++j) {
    orders.push_back(2);
    names.push_back("d" + std::to_string(j));
  }
  IntVector aug(orders.size(), 0);
  aug[0] = 1;
  RingModel m = skeleton("gw_surface_cxp1_s" + std::to_string(s), orders, names, aug, truncation);

  for (unsigned j = 1; j <= s; ++j) {
    const GroupElement target = combo(m, {{id0 + j, 1}, {ic, 1}});
    set_product(m, j, ic, target);
    for (unsigned k = 0; k <= s; ++k) set_product(m, j, id0 + k, target);
  }
  for (unsigned j = 1; j <= s; ++j) m.lambda_on_basis[j] = lambda_entries(line_minus_one_series(m, m.basis(j)));
  std::vector<GroupElement> hyp{combo(m, {{0, 2}})};
  for (std::size_t i = ib; i < m.rank(); ++i) {
    m.lambda_on_basis[i] = lambda_entries(hyperbolic_line_series(m, m.basis(i)));
    hyp.push_back(m.basis(i));
  }
  m.hyperbolic_gens = std::move(hyp);
  return m;
}

std::vector<std::string> builtin_names() {
  return {"gw_point", "gw_projective", "gw_punctured_line", "gw_punctured_a5", "gw_surface_cxp1"};
}

RingModel builtin_model(const std::string& name, const BuiltinParams& p) {
  const std::size_t n = p.truncation;
  if (name == "gw_point_C") return gw_point(PointBase::C, n);
  if (name == "gw_point_R") return gw_point(PointBase::R, n);
  if (name == "gw_point") return gw_point(p.base.value_or(PointBase::C), n);
  if (name == "gw_projective") {
    if (!p.r) throw std::invalid_argument("gw_projective requires --r");
    return gw_projective(p.base.value_or(PointBase::C), *p.r, n);
  }
  if (name == "gw_punctured_line") {
    if (p.base && *p.base != PointBase::R) throw std::invalid_argument("gw_punctured_line is shipped over R only");
    return gw_punctured_line(n);
  }
  if (name == "gw_punctured_a5") return gw_punctured_a5(p.f.value_or(3), n);
  if (name == "gw_surface_cxp1") return gw_surface_cxp1(p.s.value_or(1), n);
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

}  // namespace gwl
