#include "gwl/symfunc.hpp"

#include "gwl/kernels.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace gwl {

// -- MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Int& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t i) {
  MultiPoly p(std::move(variables));
  Exponent e(p.nvars(), 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponent e, const Int& c) {
  MultiPoly p(std::move(variables));
  p.add_term(e, c);
  return p;
}

Int MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Int& c) {
  if (e.size() != nvars())
    throw std::invalid_argument("add_term: exponent length " + std::to_string(e.size()) +
                                " does not match " + std::to_string(nvars()) + " variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0u) == d;
  });
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("polynomials live in different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_ring(b);
  return kernels::poly_product(a, b);
}

MultiPoly operator*(const Int& k, const MultiPoly& a) {
  MultiPoly out(a.vars_);
  if (k == 0) return out;
  out.terms_ = a.terms_;
  for (auto& [e, c] : out.terms_) c *= k;
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::shifted(const Exponent& s) const {
  if (s.size() != nvars()) throw std::invalid_argument("shifted: exponent length mismatch");
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != nvars()) throw std::invalid_argument("permuted: wrong permutation length");
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[perm[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

bool MultiPoly::is_symmetric_in(std::size_t begin, std::size_t end) const {
  if (end > nvars() || begin > end) throw std::invalid_argument("is_symmetric_in: bad range");
  std::vector<std::size_t> perm(nvars());
  for (std::size_t i = begin; i + 1 < end; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    if (!(permuted(perm) == *this)) return false;
  }
  return true;
}

MultiPoly MultiPoly::renamed(std::vector<std::string> variables) const {
  if (variables.size() != nvars()) throw std::invalid_argument("renamed: variable count mismatch");
  MultiPoly out(std::move(variables));
  out.terms_ = terms_;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

std::vector<std::string> numbered_variables(const std::string& prefix, std::size_t n) {
  std::vector<std::string> v;
  v.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

// -- symmetric functions ----------------------------------------------------

namespace {

template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

MultiPoly elementary_in(const std::vector<std::string>& vars, std::size_t offset, std::size_t n,
                        std::size_t k) {
  MultiPoly p(vars);
  for_each_combination(n, k, [&](std::span<const std::size_t> idx) {
    Exponent e(vars.size(), 0);
    for (auto i : idx) e[offset + i] = 1;
    p.add_term(e, 1);
  });
  return p;
}

MultiPoly convert_blocks(const MultiPoly& p, std::span<const std::size_t> sizes,
                         std::span<const std::string> prefixes);

std::vector<std::string> output_variables(std::span<const std::size_t> sizes,
                                          std::span<const std::string> prefixes) {
  std::vector<std::string> out;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    auto v = numbered_variables(prefixes[b], sizes[b]);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

MultiPoly convert_blocks(const MultiPoly& p, std::span<const std::size_t> sizes,
                         std::span<const std::string> prefixes) {
  if (sizes.empty()) return p;
  const std::size_t n = sizes[0];
  const std::size_t rest = p.nvars() - n;
  const auto& vars = p.variables();
  const std::vector<std::string> rest_vars(vars.begin() + static_cast<std::ptrdiff_t>(n), vars.end());

  // Cached powers of e_k(first block), embedded in the full variable list.
  std::vector<std::vector<MultiPoly>> epow(n + 1);
  auto e_power = [&](std::size_t k, unsigned j) -> const MultiPoly& {
    auto& cache = epow[k];
    if (cache.empty()) cache.push_back(MultiPoly::constant(vars, 1));
    while (cache.size() <= j) cache.push_back(cache.back() * elementary_in(vars, 0, n, k));
    return cache[j];
  };

  std::map<Exponent, MultiPoly> collected;  // elementary exponent -> coefficient in rest vars
  MultiPoly r = p;
  while (!r.is_zero()) {
    const Exponent lead = r.terms().rbegin()->first;
    const Exponent alpha(lead.begin(), lead.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (alpha[i] < alpha[i + 1])
        throw std::invalid_argument("to_elementary: polynomial is not symmetric");

    MultiPoly coeff_rest(rest_vars);
    MultiPoly coeff_full(vars);
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
      if (!std::equal(alpha.begin(), alpha.end(), it->first.begin())) break;
      Exponent tail(it->first.begin() + static_cast<std::ptrdiff_t>(n), it->first.end());
      Exponent full(vars.size(), 0);
      std::copy(tail.begin(), tail.end(), full.begin() + static_cast<std::ptrdiff_t>(n));
      coeff_rest.add_term(tail, it->second);
      coeff_full.add_term(full, it->second);
    }

    Exponent beta(n, 0);
    MultiPoly prod = coeff_full;
    for (std::size_t k = 0; k < n; ++k) {
      beta[k] = alpha[k] - (k + 1 < n ? alpha[k + 1] : 0u);
      if (beta[k]) prod = prod * e_power(k + 1, beta[k]);
    }
    r -= prod;
    auto [it, inserted] = collected.try_emplace(beta, coeff_rest);
    if (!inserted) it->second += coeff_rest;
  }

  MultiPoly out(output_variables(sizes, prefixes));
  for (const auto& [beta, coeff] : collected) {
    MultiPoly inner = convert_blocks(coeff, sizes.subspan(1), prefixes.subspan(1));
    for (const auto& [g, c] : inner.terms()) {
      Exponent e = beta;
      e.insert(e.end(), g.begin(), g.end());
      out.add_term(e, c);
    }
  }
  (void)rest;
  return out;
}

}  // namespace

MultiPoly elementary(std::size_t n, std::size_t k) {
  return elementary_in(numbered_variables("x", n), 0, n, k);
}

MultiPoly power_sum(std::size_t n, unsigned k) {
  auto vars = numbered_variables("x", n);
  MultiPoly p(vars);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = k;
    p.add_term(e, 1);
  }
  return p;
}

MultiPoly to_elementary_blocks(const MultiPoly& p, std::span<const std::size_t> sizes,
                               std::span<const std::string> prefixes) {
  if (sizes.size() != prefixes.size())
    throw std::invalid_argument("to_elementary_blocks: sizes and prefixes differ in length");
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (total != p.nvars())
    throw std::invalid_argument("to_elementary_blocks: block sizes do not cover the variables");
  std::size_t offset = 0;
  for (auto s : sizes) {
    if (!p.is_symmetric_in(offset, offset + s))
      throw std::invalid_argument("to_elementary: polynomial is not symmetric");
    offset += s;
  }
  return convert_blocks(p, sizes, prefixes);
}

MultiPoly to_elementary(const MultiPoly& p) {
  const std::size_t sizes[] = {p.nvars()};
  const std::string prefixes[] = {"e"};
  return to_elementary_blocks(p, sizes, prefixes);
}

MultiPoly newton_psi(unsigned k) {
  if (k == 0) throw std::invalid_argument("newton_psi: degree must be positive");
  const auto vars = numbered_variables("e", k);
  std::vector<MultiPoly> psi(k + 1, MultiPoly(vars));
  for (unsigned j = 1; j <= k; ++j) {
    MultiPoly acc(vars);
    for (unsigned i = 1; i < j; ++i) {
      MultiPoly term = MultiPoly::variable(vars, i - 1) * psi[j - i];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    const Int last = (j % 2 == 1) ? Int(j) : Int(-static_cast<long>(j));
    acc += last * MultiPoly::variable(vars, j - 1);
    psi[j] = std::move(acc);
  }
  return psi[k];
}

MultiPoly complete_sigma(unsigned k) {
  const auto vars = numbered_variables("e", std::max(k, 1u));
  std::vector<MultiPoly> h(k + 1, MultiPoly(vars));
  h[0] = MultiPoly::constant(vars, 1);
  for (unsigned j = 1; j <= k; ++j) {
    MultiPoly acc(vars);
    for (unsigned i = 1; i <= j; ++i) {
      MultiPoly term = MultiPoly::variable(vars, i - 1) * h[j - i];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    h[j] = std::move(acc);
  }
  return h[k];
}

namespace {

std::mutex universal_mutex;
std::map<std::pair<unsigned, unsigned>, MultiPoly> universal_cache;  // (0, n) for P_n

MultiPoly compute_product_universal(unsigned n) {
  std::vector<std::string> vars = numbered_variables("x", n);
  auto ys = numbered_variables("y", n);
  vars.insert(vars.end(), ys.begin(), ys.end());
  // coefficients of t^0..t^n of prod_{i,j} (1 + x_i y_j t)
  std::vector<MultiPoly> c(n + 1, MultiPoly(vars));
  c[0] = MultiPoly::constant(vars, 1);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Exponent s(2 * n, 0);
      s[i] = 1;
      s[n + j] = 1;
      for (unsigned k = n; k >= 1; --k) c[k] += c[k - 1].shifted(s);
    }
  const std::size_t sizes[] = {n, n};
  const std::string prefixes[] = {"e", "f"};
  return to_elementary_blocks(c[n], sizes, prefixes);
}

MultiPoly compute_compose_universal(unsigned m, unsigned n) {
  const unsigned total = m * n;
  const auto vars = numbered_variables("x", total);
  std::vector<MultiPoly> c(m + 1, MultiPoly(vars));
  c[0] = MultiPoly::constant(vars, 1);
  for_each_combination(total, n, [&](std::span<const std::size_t> idx) {
    Exponent s(total, 0);
    for (auto i : idx) s[i] = 1;
    for (unsigned k = m; k >= 1; --k) c[k] += c[k - 1].shifted(s);
  });
  return to_elementary(c[m]);
}

}  // namespace

MultiPoly product_universal(unsigned n, const UniversalBounds& bounds) {
  if (n < 1 || n > bounds.max_product_degree)
    throw std::out_of_range("product_universal: degree " + std::to_string(n) +
                            " outside [1, " + std::to_string(bounds.max_product_degree) + "]");
  std::lock_guard<std::mutex> lock(universal_mutex);
  auto key = std::make_pair(0u, n);
  auto it = universal_cache.find(key);
  if (it == universal_cache.end()) it = universal_cache.emplace(key, compute_product_universal(n)).first;
  return it->second;
}

MultiPoly compose_universal(unsigned m, unsigned n, const UniversalBounds& bounds) {
  if (m < 1 || n < 1 || m * n > bounds.max_compose_weight)
    throw std::out_of_range("compose_universal: (" + std::to_string(m) + ", " + std::to_string(n) +
                            ") exceeds weight bound " + std::to_string(bounds.max_compose_weight));
  std::lock_guard<std::mutex> lock(universal_mutex);
  auto key = std::make_pair(m, n);
  auto it = universal_cache.find(key);
  if (it == universal_cache.end()) it = universal_cache.emplace(key, compute_compose_universal(m, n)).first;
  return it->second;
}

}  // namespace gwl
