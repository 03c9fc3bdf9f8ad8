#pragma once

#include "gwl/integer.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <span>
#include <string>
#include <vector>

namespace gwl {

using Exponent = std::vector<unsigned>;

/// Sparse multivariate polynomial over Z.  Terms are kept in lexicographic
/// exponent order with no zero coefficients; the last term is the
/// lex-leading one.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Int& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t i);
  static MultiPoly monomial(std::vector<std::string> variables, Exponent e, const Int& c);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponent, Int>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Int coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Int& c);
  unsigned total_degree() const;
  bool is_homogeneous() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Int& k, const MultiPoly& a);
  MultiPoly pow(unsigned k) const;

  /// Multiplies by the monomial x^e (no coefficient).
  MultiPoly shifted(const Exponent& e) const;

  /// Applies a permutation of the variables (variable i -> perm[i]).
  MultiPoly permuted(std::span<const std::size_t> perm) const;

  /// True if p is invariant under every permutation of variables in
  /// [begin, end); checked on adjacent transpositions.
  bool is_symmetric_in(std::size_t begin, std::size_t end) const;
  bool is_symmetric() const { return is_symmetric_in(0, nvars()); }

  /// Same terms over a renamed variable list of equal length.
  MultiPoly renamed(std::vector<std::string> variables) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  std::map<Exponent, Int> terms_;
};

/// Variable list {prefix1, ..., prefixN}.
std::vector<std::string> numbered_variables(const std::string& prefix, std::size_t n);

/// Ring operations on MultiPoly over a fixed variable list, usable with
/// evaluate() and TruncSeries.
struct PolyRing {
  std::vector<std::string> variables;
  using value_type = MultiPoly;
  MultiPoly zero() const { return MultiPoly(variables); }
  MultiPoly one() const { return MultiPoly::constant(variables, 1); }
  MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
  MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
  MultiPoly neg(const MultiPoly& a) const { return -a; }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
  MultiPoly scale(const Int& k, const MultiPoly& a) const { return k * a; }
  bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.variables == b.variables; }
};

/// Evaluates p with variable i replaced by values[i], in any commutative ring
/// exposing zero/one/add/mul/scale.
template <class Ring>
typename Ring::value_type evaluate(const MultiPoly& p,
                                   std::span<const typename Ring::value_type> values,
                                   const Ring& ring) {
  using T = typename Ring::value_type;
  if (values.size() != p.nvars())
    throw std::invalid_argument("evaluate: expected " + std::to_string(p.nvars()) + " values");
  std::vector<std::vector<T>> powers(p.nvars());
  auto power = [&](std::size_t i, unsigned k) -> const T& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(ring.one());
    while (cache.size() <= k) cache.push_back(ring.mul(cache.back(), values[i]));
    return cache[k];
  };
  T acc = ring.zero();
  for (const auto& [e, c] : p.terms()) {
    T term = ring.one();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term = ring.mul(term, power(i, e[i]));
    acc = ring.add(acc, ring.scale(c, term));
  }
  return acc;
}

// -- symmetric functions ----------------------------------------------------

/// e_k(x1..xn); zero for k > n.
MultiPoly elementary(std::size_t n, std::size_t k);
/// p_k = x1^k + ... + xn^k.
MultiPoly power_sum(std::size_t n, unsigned k);

/// Rewrites a symmetric polynomial in x1..xn as a polynomial in e1..en by
/// lex leading-term elimination.  Throws std::invalid_argument if p is not
/// symmetric.
MultiPoly to_elementary(const MultiPoly& p);

/// Block version: p is symmetric separately in consecutive variable blocks of
/// the given sizes; block b is rewritten in variables prefixes[b]1..
MultiPoly to_elementary_blocks(const MultiPoly& p, std::span<const std::size_t> sizes,
                               std::span<const std::string> prefixes);

/// Power sum p_k in e1..ek via the Newton recursion.
MultiPoly newton_psi(unsigned k);
/// Complete symmetric function in e1..ek via sum_i (-1)^i e_i h_{k-i} = 0.
MultiPoly complete_sigma(unsigned k);

struct UniversalBounds {
  unsigned max_product_degree = 4;
  unsigned max_compose_weight = 6;
};

/// P_n(e1..en, f1..fn) with lambda^n(xy) = P_n(lambda(x), lambda(y)).
/// Memoized; safe to call concurrently.
MultiPoly product_universal(unsigned n, const UniversalBounds& bounds = {});
/// P_{m,n}(e1..e_mn) with lambda^m(lambda^n(x)) = P_{m,n}(lambda(x)).
MultiPoly compose_universal(unsigned m, unsigned n, const UniversalBounds& bounds = {});

}  // namespace gwl
