#pragma once

#include "gwl/symfunc.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gwl {

/// Polynomial over GF(2) in n variables, truncated at total degree D.  A
/// monomial is present iff its coefficient is 1; nothing above degree D is
/// ever stored.
class F2Poly {
 public:
  F2Poly(std::size_t nvars, unsigned max_degree);

  static F2Poly constant(std::size_t nvars, unsigned max_degree, bool one);
  static F2Poly variable(std::size_t nvars, unsigned max_degree, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  unsigned max_degree() const { return max_degree_; }
  const std::set<Exponent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool contains(const Exponent& e) const { return terms_.count(e) != 0; }

  /// Toggles the monomial; ignored above the truncation degree.
  void toggle(const Exponent& e);

  F2Poly& operator+=(const F2Poly& o);
  friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
  friend F2Poly operator*(const F2Poly& a, const F2Poly& b);

  /// Part of total degree exactly d.
  F2Poly homogeneous_part(unsigned d) const;
  /// Lowest positive degree carrying a monomial.
  std::optional<unsigned> lowest_positive_degree() const;

  /// Inverse of a series with constant term 1 (geometric series mod 2).
  F2Poly inverse() const;

  /// Substitutes x_i <- sum of the listed variables.
  F2Poly substitute(std::size_t i, const std::vector<std::size_t>& sum_of) const;

  std::string to_string() const;

  friend bool operator==(const F2Poly& a, const F2Poly& b) {
    return a.nvars_ == b.nvars_ && a.max_degree_ == b.max_degree_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const F2Poly& o) const;

  std::size_t nvars_;
  unsigned max_degree_;
  std::set<Exponent> terms_;
};

inline constexpr std::size_t milnor_max_n = 4;

/// (prod_{|eps| even} (1 + eps.x) / prod_{|eps| odd} (1 + eps.x))^{(-1)^n} over
/// non-zero eps in {0,1}^n, truncated at degree D.  Requires 1 <= n <= 4 and
/// D >= 2^{n-1}.
F2Poly omega(std::size_t n, unsigned max_degree);

/// Lowest positive degree of omega(n, 2^{n-1}).
unsigned vanishing_range(std::size_t n);

/// prod_{|eps| odd} (eps.x).
F2Poly top_class_product(std::size_t n);
/// sum over 2^{r_1} + ... + 2^{r_n} = 2^{n-1} of prod x_i^{2^{r_i}}.
F2Poly top_class_sum(std::size_t n);

struct MilnorReport {
  std::size_t n = 0;
  unsigned vanishing = 0;
  bool vanishing_ok = false;        // vanishing == 2^{n-1}
  bool product_equals_sum = false;
  bool product_equals_omega = false;
  std::optional<bool> substitution_cancels;  // n >= 3 only
  bool all_pass() const;
};

MilnorReport milnor_check(std::size_t n);

}  // namespace gwl
