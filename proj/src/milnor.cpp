#include "gwl/milnor.hpp"

#include "gwl/kernels.hpp"

#include <numeric>
#include <stdexcept>

namespace gwl {

namespace {

unsigned degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void require_n(std::size_t n) {
  if (n < 1 || n > milnor_max_n)
    throw std::out_of_range("milnor: n must lie in [1, " + std::to_string(milnor_max_n) + "]");
}

// 1 + sum_{i in eps} x_i (or without the 1).
F2Poly linear_form(std::size_t n, unsigned d, unsigned eps, bool with_one) {
  F2Poly p = F2Poly::constant(n, d, with_one);
  for (std::size_t i = 0; i < n; ++i)
    if (eps & (1u << i)) p += F2Poly::variable(n, d, i);
  return p;
}

}  // namespace

F2Poly::F2Poly(std::size_t nvars, unsigned max_degree) : nvars_(nvars), max_degree_(max_degree) {}

F2Poly F2Poly::constant(std::size_t nvars, unsigned max_degree, bool one) {
  F2Poly p(nvars, max_degree);
  if (one) p.toggle(Exponent(nvars, 0));
  return p;
}

F2Poly F2Poly::variable(std::size_t nvars, unsigned max_degree, std::size_t i) {
  F2Poly p(nvars, max_degree);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  p.toggle(e);
  return p;
}

void F2Poly::toggle(const Exponent& e) {
  if (e.size() != nvars_) throw std::invalid_argument("F2Poly: exponent length mismatch");
  if (degree(e) > max_degree_) return;
  auto [it, inserted] = terms_.insert(e);
  if (!inserted) terms_.erase(it);
}

void F2Poly::require_same_ring(const F2Poly& o) const {
  if (nvars_ != o.nvars_ || max_degree_ != o.max_degree_)
    throw std::invalid_argument("F2Poly: operands differ in variables or truncation");
}

F2Poly& F2Poly::operator+=(const F2Poly& o) {
  require_same_ring(o);
  for (const auto& e : o.terms_) toggle(e);
  return *this;
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
  a.require_same_ring(b);
  return kernels::f2_product(a, b);
}

F2Poly F2Poly::homogeneous_part(unsigned d) const {
  F2Poly out(nvars_, max_degree_);
  for (const auto& e : terms_)
    if (degree(e) == d) out.terms_.insert(e);
  return out;
}

std::optional<unsigned> F2Poly::lowest_positive_degree() const {
  std::optional<unsigned> best;
  for (const auto& e : terms_) {
    const unsigned d = degree(e);
    if (d > 0 && (!best || d < *best)) best = d;
  }
  return best;
}

F2Poly F2Poly::inverse() const {
  if (!contains(Exponent(nvars_, 0)))
    throw std::invalid_argument("F2Poly::inverse: constant term is zero");
  // (1 + u)^{-1} = sum_k u^k over GF(2); u^k vanishes for k > D.
  F2Poly u = *this;
  u.toggle(Exponent(nvars_, 0));
  F2Poly result = constant(nvars_, max_degree_, true);
  F2Poly term = result;
  for (unsigned k = 1; k <= max_degree_; ++k) {
    term = term * u;
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

F2Poly F2Poly::substitute(std::size_t i, const std::vector<std::size_t>& sum_of) const {
  if (i >= nvars_) throw std::out_of_range("F2Poly::substitute: variable index");
  F2Poly s(nvars_, max_degree_);
  for (auto j : sum_of) s += variable(nvars_, max_degree_, j);
  std::vector<F2Poly> powers{constant(nvars_, max_degree_, true)};
  F2Poly out(nvars_, max_degree_);
  for (const auto& e : terms_) {
    while (powers.size() <= e[i]) powers.push_back(powers.back() * s);
    Exponent rest = e;
    rest[i] = 0;
    F2Poly mono(nvars_, max_degree_);
    mono.toggle(rest);
    out += mono * powers[e[i]];
  }
  return out;
}

std::string F2Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < it->size(); ++i) {
      if ((*it)[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if ((*it)[i] > 1) mono += "^" + std::to_string((*it)[i]);
    }
    out += mono.empty() ? "1" : mono;
  }
  return out;
}

F2Poly omega(std::size_t n, unsigned max_degree) {
  require_n(n);
  if (max_degree < (1u << (n - 1)))
    throw std::invalid_argument("omega: truncation below 2^(n-1)");
  F2Poly even = F2Poly::constant(n, max_degree, true);
  F2Poly odd = even;
  for (unsigned eps = 1; eps < (1u << n); ++eps) {
    const F2Poly factor = linear_form(n, max_degree, eps, true);
    if (__builtin_popcount(eps) % 2 == 0) even = even * factor;
    else odd = odd * factor;
  }
  F2Poly ratio = even * odd.inverse();
  return n % 2 == 1 ? ratio.inverse() : ratio;
}

unsigned vanishing_range(std::size_t n) {
  require_n(n);
  const unsigned d = 1u << (n - 1);
  return omega(n, d).lowest_positive_degree().value_or(0);
}

F2Poly top_class_product(std::size_t n) {
  require_n(n);
  const unsigned d = 1u << (n - 1);
  F2Poly p = F2Poly::constant(n, d, true);
  for (unsigned eps = 1; eps < (1u << n); ++eps)
    if (__builtin_popcount(eps) % 2 == 1) p = p * linear_form(n, d, eps, false);
  return p;
}

F2Poly top_class_sum(std::size_t n) {
  require_n(n);
  const unsigned d = 1u << (n - 1);
  F2Poly p(n, d);
  Exponent r(n, 0);
  // Enumerate r in {0..n-1}^n.
  while (true) {
    unsigned total = 0;
    for (auto ri : r) total += 1u << ri;
    if (total == d) {
      Exponent e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = 1u << r[i];
      p.toggle(e);
    }
    std::size_t i = 0;
    while (i < n && r[i] == n - 1) r[i++] = 0;
    if (i == n) break;
    ++r[i];
  }
  return p;
}

bool MilnorReport::all_pass() const {
  return vanishing_ok && product_equals_sum && product_equals_omega && substitution_cancels.value_or(true);
}

MilnorReport milnor_check(std::size_t n) {
  require_n(n);
  MilnorReport rep;
  rep.n = n;
  const unsigned d = 1u << (n - 1);
  const F2Poly w = omega(n, d);
  rep.vanishing = w.lowest_positive_degree().value_or(0);
  rep.vanishing_ok = rep.vanishing == d;
  const F2Poly prod = top_class_product(n);
  rep.product_equals_sum = prod == top_class_sum(n);
  rep.product_equals_omega = prod == w.homogeneous_part(d);
  if (n >= 3) {
    const F2Poly sub = w.substitute(n - 1, {0, 1});
    rep.substitution_cancels = sub == F2Poly::constant(n, d, true);
  }
  return rep;
}

}  // namespace gwl
