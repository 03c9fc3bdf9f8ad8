#pragma once

#include "gwl/lambda_ring.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gwl {

enum class PointBase { C, R };

PointBase parse_base(const std::string& s);  // "C" or "R"
std::string to_string(PointBase b);

inline constexpr unsigned max_projective_dimension = 12;

/// GW of a point.  C: Z with lambda_t(1) = 1 + t.  R: basis {1, L}, L^2 = 1.
RingModel gw_point(PointBase base, std::size_t truncation = default_truncation);

/// GW(P^r) over the given point, basis = point basis followed by a, a^2, ...
/// up to a^rho (a^rho of order 2 when r = 1 mod 4, absent when r = 3 mod 4).
/// The lambda-series of a is the quotient of the series of H(O(1)) by that of
/// H(1); the series of a^j (j >= 2) is derived from a^j = a_j - sum c_i a^i
/// and lambda_t(a_j) = 1 + a_j t / (1 + t)^2.
RingModel gw_projective(PointBase base, unsigned r, std::size_t truncation = default_truncation);

/// ceil(r / 2).
unsigned projective_rho(unsigned r);

/// a_0 = 0, a_1 = a, a_k = (a + 2) a_{k-1} - a_{k-2} + 2a, computed in m.
std::vector<GroupElement> ak_sequence(const RingModel& m, std::size_t kmax);

struct AkReport {
  std::vector<GroupElement> a;         // a_0 .. a_kmax
  bool zero_constant_term = true;      // every a_k lies in span{a^i}
  bool monic = true;                   // a_k = a^k + lower, for k up to the top power
  std::optional<bool> h_identity;      // odd r only
  GroupElement h;                      // sum_j (-1)^j C(r+1, rho-j) a_j
  GroupElement minus_a_power;          // (-a)^rho
  bool ok() const { return zero_constant_term && monic && h_identity.value_or(true); }
};

AkReport check_ak_recursion(const RingModel& m, unsigned r, std::size_t kmax);

/// Basis {1, L, eps}, eps = <t> - 1: eps^2 = -2 eps, L eps = -eps,
/// lambda_t(eps) = (1 + (1 + eps) t) / (1 + t).
RingModel gw_punctured_line(std::size_t truncation = default_truncation);

/// c_i = C(2^{f-1}, i) * 2^{i-f} for i = 0..n, exact.
IntVector a5_gamma_coefficients(unsigned f, std::size_t n);

/// Basis {1, eps}, 2 eps = 0, eps^2 = 0, gamma^i(eps) = c_i eps.
RingModel gw_punctured_a5(unsigned f = 3, std::size_t truncation = default_truncation);

/// C x P^1 with Pic(C)[2] = (Z/2)^s: basis 1, a1..as, b, c, d0, d1..ds.
RingModel gw_surface_cxp1(unsigned s, std::size_t truncation = default_truncation);

struct BuiltinParams {
  std::optional<PointBase> base;
  std::optional<unsigned> r;
  std::optional<unsigned> f;
  std::optional<unsigned> s;
  std::size_t truncation = default_truncation;
};

/// Names: gw_point (or gw_point_C / gw_point_R), gw_projective,
/// gw_punctured_line, gw_punctured_a5, gw_surface_cxp1.
RingModel builtin_model(const std::string& name, const BuiltinParams& p);
std::vector<std::string> builtin_names();

}  // namespace gwl
