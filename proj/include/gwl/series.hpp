#pragma once

#include "gwl/integer.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gwl {

/// Coefficient arithmetic for plain integer series.
struct IntegerRing {
  using value_type = Int;
  Int zero() const { return 0; }
  Int one() const { return 1; }
  Int add(const Int& a, const Int& b) const { return a + b; }
  Int sub(const Int& a, const Int& b) const { return a - b; }
  Int neg(const Int& a) const { return -a; }
  Int mul(const Int& a, const Int& b) const { return a * b; }
  Int scale(const Int& k, const Int& a) const { return k * a; }
  bool is_zero(const Int& a) const { return a == 0; }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

inline constexpr std::size_t default_truncation = 16;

/// c_0 + c_1 t + ... + c_N t^N with coefficients in Ring.  Always holds
/// exactly N+1 coefficients.
template <class Ring>
class TruncSeries {
 public:
  using T = typename Ring::value_type;

  TruncSeries(Ring ring, std::size_t n)
      : ring_(std::move(ring)), coeffs_(n + 1, ring_.zero()) {}

  static TruncSeries one(Ring ring, std::size_t n) {
    TruncSeries s(std::move(ring), n);
    s.coeffs_[0] = s.ring_.one();
    return s;
  }

  /// Coefficients beyond N are dropped, missing ones are zero.
  static TruncSeries from_coefficients(Ring ring, std::size_t n, std::vector<T> c) {
    TruncSeries s(std::move(ring), n);
    for (std::size_t k = 0; k < c.size() && k <= n; ++k) s.coeffs_[k] = std::move(c[k]);
    return s;
  }

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const Ring& ring() const { return ring_; }
  const T& operator[](std::size_t k) const { return coeffs_.at(k); }
  void set(std::size_t k, T value) { coeffs_.at(k) = std::move(value); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  bool is_unit_series() const { return ring_.is_zero(ring_.sub(coeffs_[0], ring_.one())); }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Ring ring_;
  std::vector<T> coeffs_;
};

namespace detail {
template <class Ring>
void require_compatible(const TruncSeries<Ring>& a, const TruncSeries<Ring>& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("series over different rings");
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("series truncated at " + std::to_string(a.truncation()) +
                                " and " + std::to_string(b.truncation()));
}

template <class Ring>
void require_unit(const TruncSeries<Ring>& a, const char* op) {
  if (!a.is_unit_series())
    throw std::invalid_argument(std::string(op) + ": constant term is not the unit");
}
}  // namespace detail

template <class Ring>
TruncSeries<Ring> add(const TruncSeries<Ring>& a, const TruncSeries<Ring>& b) {
  detail::require_compatible(a, b);
  const Ring& r = a.ring();
  TruncSeries<Ring> out(r, a.truncation());
  for (std::size_t k = 0; k <= a.truncation(); ++k) out.set(k, r.add(a[k], b[k]));
  return out;
}

/// Cauchy product truncated at N.
template <class Ring>
TruncSeries<Ring> mul(const TruncSeries<Ring>& a, const TruncSeries<Ring>& b) {
  detail::require_compatible(a, b);
  const Ring& r = a.ring();
  const std::size_t n = a.truncation();
  TruncSeries<Ring> out(r, n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (r.is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (r.is_zero(b[j])) continue;
      out.set(i + j, r.add(out[i + j], r.mul(a[i], b[j])));
    }
  }
  return out;
}

/// Two-sided inverse of a unit series, by forward substitution.
template <class Ring>
TruncSeries<Ring> inverse(const TruncSeries<Ring>& a) {
  detail::require_unit(a, "inverse");
  const Ring& r = a.ring();
  const std::size_t n = a.truncation();
  TruncSeries<Ring> b = TruncSeries<Ring>::one(r, n);
  for (std::size_t k = 1; k <= n; ++k) {
    auto acc = r.zero();
    for (std::size_t i = 1; i <= k; ++i)
      if (!r.is_zero(a[i])) acc = r.add(acc, r.mul(a[i], b[k - i]));
    b.set(k, r.neg(acc));
  }
  return b;
}

/// a^e for any integer e; negative exponents require a unit series.
template <class Ring>
TruncSeries<Ring> pow(const TruncSeries<Ring>& a, const Int& e) {
  if (e < 0) return pow(inverse(a), Int(-e));
  TruncSeries<Ring> result = TruncSeries<Ring>::one(a.ring(), a.truncation());
  TruncSeries<Ring> base = a;
  Int k = e;
  while (k > 0) {
    if (k.get_ui() & 1u) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

/// Substitutes t <- t/(1-t): coefficient k is sum_{i<=k} C(k-1, k-i) c_i.
template <class Ring>
TruncSeries<Ring> gamma_from_lambda(const TruncSeries<Ring>& a) {
  detail::require_unit(a, "gamma_from_lambda");
  const Ring& r = a.ring();
  const std::size_t n = a.truncation();
  TruncSeries<Ring> out = TruncSeries<Ring>::one(r, n);
  for (std::size_t k = 1; k <= n; ++k) {
    auto acc = r.zero();
    for (std::size_t i = 1; i <= k; ++i)
      if (!r.is_zero(a[i]))
        acc = r.add(acc, r.scale(binomial(Int(static_cast<long>(k - 1)), static_cast<long>(k - i)), a[i]));
    out.set(k, std::move(acc));
  }
  return out;
}

/// Substitutes t <- t/(1+t): coefficient k is sum_{i<=k} (-1)^{k-i} C(k-1, k-i) c_i.
template <class Ring>
TruncSeries<Ring> lambda_from_gamma(const TruncSeries<Ring>& a) {
  detail::require_unit(a, "lambda_from_gamma");
  const Ring& r = a.ring();
  const std::size_t n = a.truncation();
  TruncSeries<Ring> out = TruncSeries<Ring>::one(r, n);
  for (std::size_t k = 1; k <= n; ++k) {
    auto acc = r.zero();
    for (std::size_t i = 1; i <= k; ++i) {
      if (r.is_zero(a[i])) continue;
      Int c = binomial(Int(static_cast<long>(k - 1)), static_cast<long>(k - i));
      if ((k - i) % 2 == 1) c = -c;
      acc = r.add(acc, r.scale(c, a[i]));
    }
    out.set(k, std::move(acc));
  }
  return out;
}

}  // namespace gwl
