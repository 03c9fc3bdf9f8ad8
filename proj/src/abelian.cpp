#include "gwl/abelian.hpp"

#include "gwl/normal_form.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gwl {

GroupPresentation::GroupPresentation(IntVector orders, std::vector<std::string> names)
    : orders_(std::move(orders)), names_(std::move(names)) {
  if (orders_.size() != names_.size())
    throw std::invalid_argument("presentation has " + std::to_string(orders_.size()) +
                                " orders but " + std::to_string(names_.size()) + " names");
  for (const auto& o : orders_)
    if (o < 0) throw std::invalid_argument("negative order in presentation");
}

GroupPresentation GroupPresentation::free_abelian(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back("g" + std::to_string(i));
  return GroupPresentation(IntVector(rank, 0), std::move(names));
}

IntMatrix GroupPresentation::relations() const {
  IntMatrix rel;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (orders_[i] == 0) continue;
    IntVector row(rank(), 0);
    row[i] = orders_[i];
    rel.push_back(std::move(row));
  }
  return rel;
}

void GroupPresentation::check(const GroupElement& x) const {
  if (x.size() != rank())
    throw std::invalid_argument("element has " + std::to_string(x.size()) +
                                " coordinates, presentation rank is " + std::to_string(rank()));
}

GroupElement GroupPresentation::element(IntVector coeffs) const {
  if (coeffs.size() != rank())
    throw std::invalid_argument("element has " + std::to_string(coeffs.size()) +
                                " coordinates, presentation rank is " + std::to_string(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    if (orders_[i] != 0) coeffs[i] = mod_nonneg(coeffs[i], orders_[i]);
  return GroupElement(std::move(coeffs));
}

GroupElement GroupPresentation::zero() const { return GroupElement(IntVector(rank(), 0)); }

GroupElement GroupPresentation::basis(std::size_t i) const {
  IntVector v(rank(), 0);
  v.at(i) = 1;
  return element(std::move(v));
}

GroupElement GroupPresentation::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  IntVector v(rank());
  for (std::size_t i = 0; i < rank(); ++i) v[i] = a[i] + b[i];
  return element(std::move(v));
}

GroupElement GroupPresentation::sub(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  IntVector v(rank());
  for (std::size_t i = 0; i < rank(); ++i) v[i] = a[i] - b[i];
  return element(std::move(v));
}

GroupElement GroupPresentation::neg(const GroupElement& a) const {
  check(a);
  IntVector v(rank());
  for (std::size_t i = 0; i < rank(); ++i) v[i] = -a[i];
  return element(std::move(v));
}

GroupElement GroupPresentation::scale(const Int& k, const GroupElement& a) const {
  check(a);
  IntVector v(rank());
  for (std::size_t i = 0; i < rank(); ++i) v[i] = k * a[i];
  return element(std::move(v));
}

Int GroupPresentation::element_order(const GroupElement& x) const {
  check(x);
  Int order = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    if (orders_[i] == 0) return 0;
    Int g = gcd(x[i], orders_[i]);
    order = lcm(order, Int(orders_[i] / g));
  }
  return order;
}

Subgroup subgroup_from_lattice(const GroupPresentation& pres, IntMatrix rows) {
  for (const auto& r : pres.relations()) rows.push_back(r);
  Subgroup s;
  s.pres_ = pres;
  s.hnf_ = hermite_normal_form(std::move(rows), pres.rank());
  return s;
}

Subgroup subgroup_from_generators(const GroupPresentation& pres,
                                  std::span<const GroupElement> gens) {
  IntMatrix rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    pres.check(g);
    rows.push_back(g.coeffs());
  }
  return subgroup_from_lattice(pres, std::move(rows));
}

Subgroup zero_subgroup(const GroupPresentation& pres) { return subgroup_from_lattice(pres, {}); }

Subgroup whole_group(const GroupPresentation& pres) {
  IntMatrix rows;
  for (std::size_t i = 0; i < pres.rank(); ++i) rows.push_back(pres.basis(i).coeffs());
  return subgroup_from_lattice(pres, std::move(rows));
}

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
  if (!(a.presentation() == b.presentation()))
    throw std::invalid_argument("subgroup_sum: presentations differ");
  IntMatrix rows = a.matrix();
  rows.insert(rows.end(), b.matrix().begin(), b.matrix().end());
  return subgroup_from_lattice(a.presentation(), std::move(rows));
}

std::vector<GroupElement> Subgroup::generators() const {
  std::set<GroupElement> seen;
  std::vector<GroupElement> out;
  for (const auto& row : hnf_) {
    GroupElement g = pres_.element(row);
    if (g.is_zero()) continue;
    if (seen.insert(g).second) out.push_back(std::move(g));
  }
  return out;
}

bool Subgroup::is_trivial() const { return generators().empty(); }

bool contains(const Subgroup& s, const GroupElement& x) {
  s.presentation().check(x);
  IntVector coords;
  return solve_in_hnf(s.matrix(), x.coeffs(), coords);
}

bool contains(const Subgroup& big, const Subgroup& small) {
  if (!(big.presentation() == small.presentation()))
    throw std::invalid_argument("contains: presentations differ");
  IntVector coords;
  return std::all_of(small.matrix().begin(), small.matrix().end(),
                     [&](const IntVector& row) { return solve_in_hnf(big.matrix(), row, coords); });
}

bool subgroups_equal(const Subgroup& a, const Subgroup& b) {
  if (a.presentation().rank() != b.presentation().rank())
    throw std::invalid_argument("subgroups_equal: dimension mismatch");
  return a.matrix() == b.matrix();
}

IntVector quotient_invariants(const GroupPresentation& pres, const Subgroup& s) {
  if (!(pres == s.presentation()))
    throw std::invalid_argument("quotient_invariants: subgroup belongs to another presentation");
  return cokernel_invariants(s.matrix(), pres.rank());
}

IntVector relative_invariants(const Subgroup& big, const Subgroup& small) {
  if (!(big.presentation() == small.presentation()))
    throw std::invalid_argument("relative_invariants: presentations differ");
  IntMatrix coords;
  for (const auto& row : small.matrix()) {
    IntVector c;
    if (!solve_in_hnf(big.matrix(), row, c))
      throw std::invalid_argument("relative_invariants: subgroup is not contained in the larger one");
    coords.push_back(std::move(c));
  }
  return cokernel_invariants(coords, big.matrix().size());
}

Int group_order(const IntVector& invariants) {
  Int order = 1;
  for (const auto& d : invariants) {
    if (d == 0) return 0;
    order *= d;
  }
  return order;
}

QuotientMap::QuotientMap(const GroupPresentation& source, const Subgroup& killed)
    : source_(source) {
  if (!(source == killed.presentation()))
    throw std::invalid_argument("QuotientMap: subgroup belongs to another presentation");
  const std::size_t n = source.rank();
  const SmithForm snf = smith_normal_form(killed.matrix(), n);
  right_ = snf.right;
  IntVector orders;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) {
    Int d = j < snf.diagonal.size() ? snf.diagonal[j] : Int(0);
    if (d == 1) continue;
    kept_.push_back(j);
    orders.push_back(d);
    names.push_back("w" + std::to_string(kept_.size() - 1));
  }
  target_ = GroupPresentation(std::move(orders), std::move(names));
}

GroupElement QuotientMap::apply(const GroupElement& x) const {
  source_.check(x);
  IntVector y(kept_.size(), 0);
  for (std::size_t k = 0; k < kept_.size(); ++k) {
    const std::size_t j = kept_[k];
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) y[k] += x[i] * right_[i][j];
  }
  return target_.element(std::move(y));
}

Subgroup QuotientMap::image(const Subgroup& s) const {
  std::vector<GroupElement> gens;
  for (const auto& row : s.matrix()) gens.push_back(apply(GroupElement(row)));
  return subgroup_from_generators(target_, gens);
}

}  // namespace gwl
