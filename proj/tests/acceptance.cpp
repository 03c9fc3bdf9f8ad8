// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "builtin_instances.hpp"

#include "gwl/filtration.hpp"
#include "gwl/milnor.hpp"
#include "gwl/models.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace gwl;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

GroupElement el(const RingModel& m, std::initializer_list<std::pair<const char*, long>> terms) {
  IntVector v(m.rank(), 0);
  for (const auto& [label, c] : terms) v[m.index_of(label)] += c;
  return m.group.element(v);
}

Subgroup span(const RingModel& m, std::vector<GroupElement> gens) { return subgroup_from_generators(m.group, gens); }

std::string a_label(unsigned i) { return i == 1 ? "a" : "a^" + std::to_string(i); }

void projective_over_c(Verdict& v) {
  for (unsigned r = 2; r <= 7; ++r) {
    const std::string tag = "r=" + std::to_string(r) + ": ";
    const RingModel m = gw_projective(PointBase::C, r);
    const unsigned rho = projective_rho(r);
    const unsigned top = r % 4 == 3 ? rho - 1 : rho;
    v.require(m.rank() == 1 + top, tag + "rank");
    for (unsigned i = 1; i <= top; ++i) {
      const Int expected = (i == rho && r % 4 == 1) ? 2 : 0;
      v.require(m.group.orders()[i] == expected, tag + "order of " + a_label(i));
    }
    const GroupElement a = m.basis(1);
    for (unsigned k = 1; k <= rho + 3; ++k) {
      const bool vanishes = power(m, a, k).is_zero();
      // a^rho itself vanishes exactly when r = 3 mod 4.
      const bool expected = k > rho || (k == rho && r % 4 == 3);
      v.require(vanishes == expected, tag + "a^" + std::to_string(k) + " vanishing");
    }

    FiltrationOptions opt;
    opt.kmax = 2 * rho + 2;
    const FiltrationResult f = gamma_filtration(m, opt);
    v.require(f.exact, tag + "filtration not certified exact");
    for (std::size_t i = 1; i <= opt.kmax; ++i) {
      std::vector<GroupElement> ideal;
      for (unsigned j = (static_cast<unsigned>(i) + 1) / 2; j <= top; ++j) ideal.push_back(m.basis(j));
      v.require(subgroups_equal(f.pieces[i], span(m, ideal)), tag + "F^" + std::to_string(i));
    }
    for (std::size_t i = 0; i < f.graded.size(); ++i) {
      IntVector expected;
      if (i == 0) expected = {0};
      else if (i % 2 == 0 && i / 2 <= top) expected = {(i / 2 == rho && r % 4 == 1) ? Int(2) : Int(0)};
      v.require(f.graded[i] == expected, tag + "gr^" + std::to_string(i));
    }
  }
}

void projective_plane_over_r(Verdict& v) {
  const RingModel m = gw_projective(PointBase::R, 2);
  const GroupElement e = el(m, {{"a", 1}, {"1", 1}, {"L", 1}});
  const GroupElement form = el(m, {{"1", 1}, {"L", 2}});  // <1,-1,-1>
  const GroupElement psi2 = psi_k(m, e, 2);
  v.require(psi2 == m.group.add(m.group.scale(-2, form), m.group.scale(4, e)), "psi^2(e)");
  v.require(!(psi2 == m.group.scale(2, m.unit)), "psi^2(e) equals 2");
  v.require(lambda_k(m, e, 2) == el(m, {{"L", 1}}), "lambda^2(e) != L");
}

void gamma_of_hyperbolic_lines(Verdict& v) {
  auto check = [&](const RingModel& m, const std::string& label) {
    const GroupElement x = m.basis(m.index_of(label));
    const ModelSeries g = gamma_total(m, x, 8);
    v.require(g[2] == m.group.neg(x), m.name + ": gamma^2(" + label + ")");
    for (std::size_t i = 3; i <= 8; ++i) v.require(g[i].is_zero(), m.name + ": gamma^" + std::to_string(i) + "(" + label + ")");
  };
  for (unsigned r = 1; r <= 7; ++r)
    for (auto base : {PointBase::C, PointBase::R}) check(gw_projective(base, r), "a");
  for (unsigned s = 0; s <= 3; ++s) {
    const RingModel m = gw_surface_cxp1(s);
    check(m, "b");
    check(m, "c");
    for (unsigned k = 0; k <= s; ++k) check(m, "d" + std::to_string(k));
  }
  // eps of the punctured line is eps - 1 for a symmetric line bundle eps, so it
  // is a line-minus-one class: gamma_t = 1 + eps t.
  const RingModel p = gw_punctured_line();
  const GroupElement eps = p.basis(p.index_of("eps"));
  const ModelSeries g = gamma_total(p, eps, 8);
  v.require(g[1] == eps, "punctured line: gamma^1(eps)");
  for (std::size_t i = 2; i <= 8; ++i) v.require(g[i].is_zero(), "punctured line: gamma^" + std::to_string(i) + "(eps)");
  v.note << "a, b, c, d0..ds: gamma^2 = -x, gamma^3..8 = 0; eps of the punctured line checked as line-minus-one "
            "(gamma_t = 1 + eps t)";
}

void real_point(Verdict& v) {
  const RingModel m = gw_point(PointBase::R);
  FiltrationOptions opt;
  opt.kmax = 7;
  const FiltrationResult f = gamma_filtration(m, opt);
  v.require(f.stabilized, "not stabilized");
  const GroupElement l_minus_1 = el(m, {{"L", 1}, {"1", -1}});
  for (std::size_t k = 1; k <= 6; ++k) {
    const Subgroup expected = span(m, {m.group.scale(Int(1) << static_cast<unsigned>(k - 1), l_minus_1)});
    v.require(subgroups_equal(f.pieces[k], expected), "F^" + std::to_string(k));
    v.require(f.graded[k] == IntVector{2}, "gr^" + std::to_string(k));
  }
  v.require(group_order(f.graded[1]) == Int(static_cast<unsigned long>(line_elements(m).size())),
            "|gr^1| != number of line elements");
}

void punctured_line(Verdict& v) {
  const RingModel m = gw_punctured_line();
  FiltrationOptions opt;
  opt.kmax = 6;
  const FiltrationResult f = gamma_filtration(m, opt);
  v.require(f.stabilized, "not stabilized");
  const GroupElement l_minus_1 = el(m, {{"L", 1}, {"1", -1}});
  const GroupElement eps = el(m, {{"eps", 1}});
  for (std::size_t i = 1; i <= 5; ++i) {
    const Int c = Int(1) << static_cast<unsigned>(i - 1);
    const Subgroup expected = span(m, {m.group.scale(c, l_minus_1), m.group.scale(c, eps)});
    v.require(subgroups_equal(f.pieces[i], expected), "F^" + std::to_string(i));
  }
}

void punctured_five_space(Verdict& v) {
  for (unsigned f = 3; f <= 5; ++f) {
    const std::string tag = "f=" + std::to_string(f) + ": ";
    const IntVector c = a5_gamma_coefficients(f, 4);
    v.require(c[2] % 2 != 0, tag + "c_2 even");
    v.require(c[3] % 2 == 0 && c[4] % 2 == 0, tag + "c_3 or c_4 odd");
    const RingModel m = gw_punctured_a5(f);
    FiltrationOptions opt;
    opt.kmax = 4;
    const FiltrationResult gw = gamma_filtration(m, opt);
    const FiltrationResult w = witt_filtration(m, gw);
    for (const FiltrationResult* r : {&gw, &w}) {
      const std::string q = tag + (r->witt ? "W: " : "GW: ");
      const Subgroup zero = zero_subgroup(r->group);
      v.require(r->exact, q + "not exact");
      v.require(subgroups_equal(r->pieces[1], r->pieces[2]), q + "F^1 != F^2");
      v.require(relative_invariants(r->pieces[1], zero) == IntVector{2}, q + "F^1 not Z/2");
      v.require(r->pieces[3].is_trivial(), q + "F^3 != 0");
    }
    v.require(contains(gw.pieces[1], el(m, {{"eps", 1}})), tag + "eps not in F^1");
  }
}

void surface(Verdict& v) {
  for (unsigned s = 1; s <= 3; ++s) {
    const RingModel m = gw_surface_cxp1(s);
    FiltrationOptions opt;
    opt.kmax = 5;
    const FiltrationResult f = gamma_filtration(m, opt);
    const Subgroup zero = zero_subgroup(m.group);
    const std::string tag = "s=" + std::to_string(s) + ": ";
    v.require(f.exact, tag + "not exact");
    v.require(relative_invariants(f.pieces[3], zero) == IntVector(s, Int(2)), tag + "F^3 != (Z/2)^s");
    v.require(f.pieces[4].is_trivial(), tag + "F^4 != 0");
  }
}

void special_axioms(Verdict& v) {
  std::size_t pairs = 0;
  bool saw_p22 = false;
  for (const auto& m : all_builtin_instances())
    for (std::size_t i = 0; i < m.rank(); ++i)
      for (std::size_t j = i; j < m.rank(); ++j) {
        const SpecialReport rep = verify_special_pair(m, m.basis(i), m.basis(j), 3);
        ++pairs;
        for (const auto& c : rep.checks) {
          saw_p22 |= c.identity.rfind("P_{2,2}", 0) == 0;
          v.require(c.holds, m.name + ": " + c.identity + " on " + m.group.names()[i] + "," + m.group.names()[j]);
        }
      }
  v.require(saw_p22, "P_{2,2} never checked");
  RingModel faulty = gw_projective(PointBase::C, 2);
  auto& entry = faulty.lambda_on_basis[faulty.index_of("a")].at(1);
  v.require(!entry.is_zero(), "lambda^2(a) is zero, fault would be void");
  entry = faulty.group.neg(entry);
  bool caught = false;
  for (std::size_t i = 0; i < faulty.rank(); ++i)
    for (std::size_t j = i; j < faulty.rank(); ++j)
      caught |= !verify_special_pair(faulty, faulty.basis(i), faulty.basis(j), 3).all_hold();
  v.require(caught, "sign-flipped lambda^2(a) not detected");
  if (v.ok) v.note << pairs << " generator pairs, fault detected";
}

void clauwens(Verdict& v) {
  std::size_t two_torsion = 0;
  for (const auto& m : all_builtin_instances()) {
    for (const auto& x : torsion_elements(m)) {
      if (!m.group.scale(2, x).is_zero()) continue;
      ++two_torsion;
      v.require(power(m, x, 3).is_zero(), m.name + ": x^3 != 0");
    }
    v.require(clauwens_check(m).violations.empty(), m.name + ": prime-power violation");
  }
  if (v.ok) v.note << two_torsion << " elements with 2x = 0";
}

void milnor(Verdict& v) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const MilnorReport r = milnor_check(n);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    v.require(r.vanishing == (1u << (n - 1)), tag + "vanishing range");
    v.require(r.product_equals_sum, tag + "product != sum");
    v.require(r.product_equals_omega, tag + "product != omega coefficient");
  }
}

void h_identity(Verdict& v) {
  for (unsigned r : {3u, 5u, 7u, 9u})
    for (auto base : {PointBase::C, PointBase::R}) {
      const RingModel m = gw_projective(base, r);
      const AkReport rep = check_ak_recursion(m, r, projective_rho(r));
      v.require(rep.h_identity.value_or(false), m.name + ": h_r != (-a)^rho");
    }
}

// -- compact oracle suites --------------------------------------------------

void abelian_oracle(Verdict& v) {
  std::mt19937 rng(2024);
  const long choices[] = {2, 3, 4, 6, 8, 9, 16};
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    IntVector orders;
    std::vector<std::string> names;
    long total = 1;
    for (int i = 0; i < 4; ++i) {
      const long o = choices[pick(rng)];
      if (total * o > 256) break;
      total *= o;
      orders.push_back(o);
      names.push_back("g" + std::to_string(i));
    }
    const GroupPresentation g(orders, names);
    std::vector<GroupElement> gens;
    for (int k = 0; k < 2; ++k) {
      IntVector c;
      for (std::size_t i = 0; i < g.rank(); ++i) c.push_back(coef(rng));
      gens.push_back(g.element(c));
    }
    std::set<GroupElement> closure{g.zero()};
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& x : std::vector<GroupElement>(closure.begin(), closure.end()))
        for (const auto& s : gens) grew |= closure.insert(g.add(x, s)).second;
    }
    const Subgroup s = subgroup_from_generators(g, gens);
    v.require(group_order(relative_invariants(s, zero_subgroup(g))) == Int(static_cast<long>(closure.size())),
              "subgroup order");
    v.require(group_order(quotient_invariants(g, s)) * Int(static_cast<long>(closure.size())) == Int(total),
              "quotient order");
    IntVector c(g.rank(), 0);
    for (long idx = 0; idx < total; ++idx) {
      long rest = idx;
      for (std::size_t i = 0; i < g.rank(); ++i) {
        c[i] = rest % orders[i].get_si();
        rest /= orders[i].get_si();
      }
      const GroupElement x = g.element(c);
      v.require(contains(s, x) == (closure.count(x) == 1), "membership");
    }
  }
}

void symfunc_oracle(Verdict& v) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto es = numbered_variables("e", n);
    const auto xs = numbered_variables("x", n);
    std::vector<MultiPoly> values;
    for (std::size_t k = 1; k <= n; ++k) values.push_back(elementary(n, k));
    for (int trial = 0; trial < 6; ++trial) {
      MultiPoly q(es);
      for (int t = 0; t < 4; ++t) {
        Exponent e(n, 0);
        unsigned weight = 0;
        for (int step = 0; step < 4; ++step) {
          const std::size_t i = static_cast<std::size_t>(rng() % n);
          if (weight + i + 1 <= 6) {
            ++e[i];
            weight += static_cast<unsigned>(i + 1);
          }
        }
        q.add_term(e, coef(rng));
      }
      const MultiPoly p = evaluate<PolyRing>(q, values, PolyRing{xs});
      v.require(to_elementary(p) == q, "round trip n=" + std::to_string(n));
    }
  }
}

void series_oracle(Verdict& v) {
  using S = TruncSeries<IntegerRing>;
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<Int> c{1};
    for (std::size_t k = 1; k <= n; ++k) c.push_back(coef(rng));
    const S a = S::from_coefficients({}, n, c);
    // Direct substitution t <- t/(1-t).
    S u(IntegerRing{}, n), direct(IntegerRing{}, n), power = S::one({}, n);
    for (std::size_t k = 1; k <= n; ++k) u.set(k, 1);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k <= n; ++k) direct.set(k, direct[k] + a[i] * power[k]);
      power = mul(power, u);
    }
    v.require(gamma_from_lambda(a) == direct, "substitution N=" + std::to_string(n));
    v.require(lambda_from_gamma(gamma_from_lambda(a)) == a, "round trip N=" + std::to_string(n));
    v.require(mul(a, inverse(a)) == S::one({}, n), "inverse N=" + std::to_string(n));
  }
}

void oracle_suites(Verdict& v) {
  abelian_oracle(v);
  symfunc_oracle(v);
  series_oracle(v);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"projective space over C, r = 2..7: group, powers of a, filtration, graded", projective_over_c},
      {"projective plane over R: psi^2(e) and lambda^2(e)", projective_plane_over_r},
      {"gamma operations on H(line - 1) generators", gamma_of_hyperbolic_lines},
      {"GW(R): F^k = 2^(k-1)(L-1)Z, gr^k = Z/2, |gr^1| = #lines", real_point},
      {"punctured line over R: F^i = <2^(i-1)(L-1), 2^(i-1)eps>", punctured_line},
      {"punctured five-space: F^1 = F^2 = Z/2, F^3 = 0 in GW and W; c_i parities", punctured_five_space},
      {"surface C x P^1, s = 1..3: F^3 = (Z/2)^s, F^4 = 0", surface},
      {"special identities on all builtins; sign fault detected", special_axioms},
      {"2-torsion cubes vanish in every builtin", clauwens},
      {"Stiefel-Whitney identities for n = 1..4", milnor},
      {"h_r = (-a)^rho for r = 3, 5, 7, 9", h_identity},
      {"oracle suites: abelian groups, symmetric functions, series", oracle_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) {
      v.ok = false;
      v.note << " (exceeded 10 s)";
    }
    failures += v.ok ? 0 : 1;
    std::cout << (v.ok ? "PASS " : "FAIL ") << (i + 1) << ": " << criteria[i].first;
    const std::string note = v.note.str();
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
