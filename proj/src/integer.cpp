#include "gwl/integer.hpp"

#include <algorithm>

namespace gwl {

Int binomial(const Int& n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
  }
  // C(-m, k) = (-1)^k C(m + k - 1, k)
  Int m = -n;
  Int top = m + k - 1;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : Int(-r);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_nonneg(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs(b);
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace gwl
