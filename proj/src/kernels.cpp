#include "gwl/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace gwl::kernels {

namespace {

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
  return e;
}

unsigned degree(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

std::vector<std::pair<Exponent, Int>> term_list(const MultiPoly& p) {
  return {p.terms().begin(), p.terms().end()};
}

void merge_into(std::map<Exponent, Int>& acc, const Exponent& e, const Int& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) it->second += c;
}

MultiPoly from_map(const std::vector<std::string>& vars, const std::map<Exponent, Int>& acc) {
  MultiPoly out(vars);
  for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

// p^e when n is a prime power, with p; nullopt otherwise (including n <= 1).
std::optional<std::pair<Int, unsigned>> prime_power(const Int& n) {
  if (n <= 1) return std::nullopt;
  Int p = 2;
  Int rest = n;
  while (p * p <= rest && rest % p != 0) ++p;
  if (rest % p != 0) p = rest;
  unsigned e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, e);
}

std::optional<GroupElement> clauwens_violation(const RingModel& m, const GroupElement& x,
                                               bool& counted) {
  counted = false;
  auto pe = prime_power(m.group.element_order(x));
  if (!pe) return std::nullopt;
  counted = true;
  const auto& [p, e] = *pe;
  Int pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
  const Int exponent = pk + pk / p;
  if (!power(m, x, static_cast<unsigned>(exponent.get_ui())).is_zero()) return x;
  return std::nullopt;
}

}  // namespace

MultiPoly poly_product_serial(const MultiPoly& a, const MultiPoly& b) {
  std::map<Exponent, Int> acc;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) merge_into(acc, add_exponents(ea, eb), ca * cb);
  return from_map(a.variables(), acc);
}

MultiPoly poly_product_parallel(const MultiPoly& a, const MultiPoly& b) {
  const auto at = term_list(a);
  const auto bt = term_list(b);
  const int nthreads = omp_get_max_threads();
  std::vector<std::map<Exponent, Int>> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(at.size()); ++i)
      for (const auto& [eb, cb] : bt) merge_into(local, add_exponents(at[i].first, eb), at[i].second * cb);
  }
  std::map<Exponent, Int> acc;
  for (const auto& local : partial)
    for (const auto& [e, c] : local) merge_into(acc, e, c);
  return from_map(a.variables(), acc);
}

MultiPoly poly_product(const MultiPoly& a, const MultiPoly& b) {
  if (a.size() * b.size() >= parallel_threshold && omp_get_max_threads() > 1 && !omp_in_parallel())
    return poly_product_parallel(a, b);
  return poly_product_serial(a, b);
}

F2Poly f2_product_serial(const F2Poly& a, const F2Poly& b) {
  F2Poly out(a.nvars(), a.max_degree());
  for (const auto& ea : a.terms())
    for (const auto& eb : b.terms())
      if (degree(ea) + degree(eb) <= a.max_degree()) out.toggle(add_exponents(ea, eb));
  return out;
}

F2Poly f2_product_parallel(const F2Poly& a, const F2Poly& b) {
  const std::vector<Exponent> at(a.terms().begin(), a.terms().end());
  const int nthreads = omp_get_max_threads();
  std::vector<F2Poly> partial(static_cast<std::size_t>(nthreads), F2Poly(a.nvars(), a.max_degree()));
#pragma omp parallel num_threads(nthreads)
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(at.size()); ++i)
      for (const auto& eb : b.terms())
        if (degree(at[i]) + degree(eb) <= a.max_degree()) local.toggle(add_exponents(at[i], eb));
  }
  F2Poly out(a.nvars(), a.max_degree());
  for (const auto& local : partial) out += local;
  return out;
}

F2Poly f2_product(const F2Poly& a, const F2Poly& b) {
  if (a.terms().size() * b.terms().size() >= parallel_threshold && omp_get_max_threads() > 1 &&
      !omp_in_parallel())
    return f2_product_parallel(a, b);
  return f2_product_serial(a, b);
}

std::vector<GroupElement> pairwise_products_serial(const RingModel& m,
                                                   std::span<const GroupElement> left,
                                                   std::span<const GroupElement> right) {
  std::vector<GroupElement> out;
  for (const auto& l : left)
    for (const auto& r : right) {
      GroupElement p = multiply(m, l, r);
      if (!p.is_zero()) out.push_back(std::move(p));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroupElement> pairwise_products_parallel(const RingModel& m,
                                                     std::span<const GroupElement> left,
                                                     std::span<const GroupElement> right) {
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(left.size() * right.size());
  const int nthreads = omp_get_max_threads();
  std::vector<std::vector<GroupElement>> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t k = 0; k < total; ++k) {
      const auto i = static_cast<std::size_t>(k) / right.size();
      const auto j = static_cast<std::size_t>(k) % right.size();
      GroupElement p = multiply(m, left[i], right[j]);
      if (!p.is_zero()) local.push_back(std::move(p));
    }
  }
  std::vector<GroupElement> out;
  for (auto& local : partial) out.insert(out.end(), local.begin(), local.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroupElement> pairwise_products(const RingModel& m,
                                            std::span<const GroupElement> left,
                                            std::span<const GroupElement> right) {
  if (left.size() * right.size() >= parallel_threshold && omp_get_max_threads() > 1 &&
      !omp_in_parallel())
    return pairwise_products_parallel(m, left, right);
  return pairwise_products_serial(m, left, right);
}

ClauwensReport clauwens_scan_serial(const RingModel& m, std::span<const GroupElement> elements) {
  ClauwensReport report;
  for (const auto& x : elements) {
    bool counted = false;
    if (auto v = clauwens_violation(m, x, counted)) report.violations.push_back(*v);
    if (counted) ++report.checked;
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

ClauwensReport clauwens_scan_parallel(const RingModel& m, std::span<const GroupElement> elements) {
  const int nthreads = omp_get_max_threads();
  std::vector<ClauwensReport> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(elements.size()); ++k) {
      bool counted = false;
      if (auto v = clauwens_violation(m, elements[static_cast<std::size_t>(k)], counted))
        local.violations.push_back(*v);
      if (counted) ++local.checked;
    }
  }
  ClauwensReport report;
  for (auto& local : partial) {
    report.checked += local.checked;
    report.violations.insert(report.violations.end(), local.violations.begin(), local.violations.end());
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

}  // namespace gwl::kernels
