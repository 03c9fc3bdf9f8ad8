#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gwl {

using Int = mpz_class;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

/// Binomial coefficient C(n, k) for arbitrary integer n (upper index may be
/// negative) and k >= 0; zero for k < 0.
Int binomial(const Int& n, long k);

/// Floor division and the matching non-negative remainder for b > 0.
Int floor_div(const Int& a, const Int& b);
Int mod_nonneg(const Int& a, const Int& b);

bool is_zero(const IntVector& v);

std::string to_string(const Int& x);
std::string to_string(const IntVector& v);

}  // namespace gwl
