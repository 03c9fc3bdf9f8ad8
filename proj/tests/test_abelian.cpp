#include "gwl/abelian.hpp"
#include "gwl/normal_form.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace gwl;

namespace {

// Random finite presentation with |G| <= 256.
GroupPresentation random_finite_group(std::mt19937& rng) {
  static const long choices[] = {2, 3, 4, 5, 6, 8, 9, 12, 16};
  std::uniform_int_distribution<int> pick(0, 8), rank_pick(1, 4);
  IntVector orders;
  std::vector<std::string> names;
  long total = 1;
  const int rank = rank_pick(rng);
  for (int i = 0; i < rank; ++i) {
    const long o = choices[pick(rng)];
    if (total * o > 256) break;
    total *= o;
    orders.push_back(o);
    names.push_back("g" + std::to_string(i));
  }
  if (orders.empty()) {
    orders.push_back(7);
    names.push_back("g0");
  }
  return GroupPresentation(orders, names);
}

std::vector<GroupElement> all_elements(const GroupPresentation& g) {
  std::vector<GroupElement> out;
  IntVector c(g.rank(), 0);
  while (true) {
    out.push_back(g.element(c));
    std::size_t i = 0;
    while (i < c.size() && c[i] + 1 == g.orders()[i]) c[i++] = 0;
    if (i == c.size()) break;
    c[i] += 1;
  }
  return out;
}

GroupElement random_element(const GroupPresentation& g, std::mt19937& rng) {
  IntVector c;
  std::uniform_int_distribution<long> d(-20, 20);
  for (std::size_t i = 0; i < g.rank(); ++i) c.push_back(d(rng));
  return g.element(c);
}

// Closure of the generators under addition.
std::set<GroupElement> brute_span(const GroupPresentation& g, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen{g.zero()};
  std::vector<GroupElement> frontier{g.zero()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        GroupElement y = g.add(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Number of elements killed by d in the group with these invariant factors.
long torsion_count(const IntVector& inv, long d) {
  long n = 1;
  for (const auto& f : inv) n *= std::gcd(d, f.get_si());
  return n;
}

}  // namespace

TEST_CASE("hnf is canonical and reduced") {
  const IntMatrix a{{2, 4, 6}, {0, 3, 9}, {4, 2, 0}};
  const IntMatrix h = hermite_normal_form(a, 3);
  IntMatrix b{{4, 2, 0}, {6, 9, 15}, {0, 3, 9}, {2, 4, 6}};
  CHECK(hermite_normal_form(b, 3) == h);
  for (std::size_t r = 0; r < h.size(); ++r) {
    const std::size_t p = pivot_column(h[r]);
    CHECK(h[r][p] > 0);
    for (std::size_t q = 0; q < r; ++q) {
      CHECK(h[q][p] >= 0);
      CHECK(h[q][p] < h[r][p]);
    }
  }
}

TEST_CASE("smith form satisfies U A V = D") {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithForm s = smith_normal_form(a, 3);
  CHECK(s.diagonal == IntVector{2, 6, 12});
  IntMatrix uav(3, IntVector(3, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) uav[i][j] += s.left[i][k] * a[k][l] * s.right[l][j];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(uav[i][j] == (i == j ? s.diagonal[i] : Int(0)));
}

TEST_CASE("cokernel invariants of small lattices") {
  CHECK(cokernel_invariants({{2, 4}, {0, 6}}, 2) == IntVector{2, 6});
  CHECK(cokernel_invariants({{2, 0}}, 2) == IntVector{2, 0});
  CHECK(cokernel_invariants({}, 2) == IntVector{0, 0});
  CHECK(cokernel_invariants({{1, 0}, {0, 1}}, 2).empty());
}

TEST_CASE("integer kernel is the full solution lattice") {
  const IntMatrix images{{1, 2}, {2, 4}, {3, 6}, {0, 1}};
  const IntMatrix k = integer_kernel(images, 2);
  CHECK(k.size() == 2);
  for (const auto& row : k)
    for (std::size_t c = 0; c < 2; ++c) {
      Int s = 0;
      for (std::size_t i = 0; i < 4; ++i) s += row[i] * images[i][c];
      CHECK(s == 0);
    }
  IntVector coords;
  CHECK(solve_in_hnf(k, {3, 0, -1, 0}, coords));
  CHECK_FALSE(solve_in_hnf(k, {1, 0, 0, 0}, coords));
}

TEST_CASE("subgroups agree with exhaustive enumeration") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const GroupPresentation g = random_finite_group(rng);
    const auto elements = all_elements(g);
    std::uniform_int_distribution<int> ngens(0, 3);
    std::vector<GroupElement> gens;
    for (int i = ngens(rng); i > 0; --i) gens.push_back(random_element(g, rng));
    const Subgroup s = subgroup_from_generators(g, gens);
    const auto span = brute_span(g, gens);

    CHECK(group_order(relative_invariants(s, zero_subgroup(g))) == Int(static_cast<long>(span.size())));
    for (const auto& x : elements) CHECK(contains(s, x) == (span.count(x) == 1));

    // Quotient isomorphism type via |{x : d x in S}| / |S| for every d.
    const IntVector inv = quotient_invariants(g, s);
    const long order = static_cast<long>(elements.size());
    CHECK(group_order(inv) * Int(static_cast<long>(span.size())) == Int(order));
    for (long d = 1; d <= order; ++d) {
      long killed = 0;
      for (const auto& x : elements) killed += span.count(g.scale(d, x));
      CHECK(killed / static_cast<long>(span.size()) == torsion_count(inv, d));
    }

    // Canonical form does not depend on the generating set.
    std::vector<GroupElement> other = gens;
    if (!gens.empty()) other.push_back(g.add(gens.front(), gens.back()));
    std::shuffle(other.begin(), other.end(), rng);
    CHECK(subgroup_from_generators(g, other) == s);

    // Sums match the span of the union.
    std::vector<GroupElement> more{random_element(g, rng)};
    const Subgroup t = subgroup_from_generators(g, more);
    std::vector<GroupElement> both = gens;
    both.push_back(more.front());
    const auto union_span = brute_span(g, both);
    const Subgroup st = subgroup_sum(s, t);
    CHECK(group_order(relative_invariants(st, zero_subgroup(g))) == Int(static_cast<long>(union_span.size())));
    CHECK(contains(st, s));
    CHECK(contains(st, t));
    CHECK(group_order(relative_invariants(st, s)) * Int(static_cast<long>(span.size())) ==
          Int(static_cast<long>(union_span.size())));
  }
}

TEST_CASE("quotient map is a homomorphism with the right kernel") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const GroupPresentation g = random_finite_group(rng);
    std::vector<GroupElement> gens{random_element(g, rng), random_element(g, rng)};
    const Subgroup s = subgroup_from_generators(g, gens);
    const QuotientMap q(g, s);
    const auto elements = all_elements(g);
    std::set<GroupElement> image;
    for (const auto& x : elements) {
      CHECK(q.apply(x).is_zero() == contains(s, x));
      image.insert(q.apply(x));
    }
    CHECK(Int(static_cast<long>(image.size())) == group_order(quotient_invariants(g, s)));
    for (int k = 0; k < 20; ++k) {
      const GroupElement x = random_element(g, rng), y = random_element(g, rng);
      CHECK(q.apply(g.add(x, y)) == q.target().add(q.apply(x), q.apply(y)));
    }
  }
}

TEST_CASE("mixed free and torsion coordinates") {
  const GroupPresentation g({0, 2, 0}, {"1", "t", "a"});
  CHECK(g.element({3, 5, -1}) == GroupElement({3, 1, -1}));
  CHECK(g.element_order(g.basis(1)) == 2);
  CHECK(g.element_order(g.basis(0)) == 0);
  const std::vector<GroupElement> gens{g.element({2, 0, 0}), g.element({0, 1, 4})};
  const Subgroup s = subgroup_from_generators(g, gens);
  CHECK(quotient_invariants(g, s) == IntVector{2, 8});
  CHECK_FALSE(contains(s, g.element({0, 0, 4})));
  CHECK(contains(s, g.element({0, 0, 8})));
  CHECK(relative_invariants(whole_group(g), s) == IntVector{2, 8});
  CHECK_THROWS_AS(relative_invariants(s, whole_group(g)), std::invalid_argument);
}
