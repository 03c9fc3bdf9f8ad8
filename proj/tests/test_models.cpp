#include "gwl/filtration.hpp"
#include "gwl/models.hpp"

#include <doctest.h>

using namespace gwl;

namespace {

GroupElement el(const RingModel& m, std::initializer_list<std::pair<const char*, long>> terms) {
  IntVector v(m.rank(), 0);
  for (const auto& [label, c] : terms) v[m.index_of(label)] += c;
  return m.group.element(v);
}

std::string a_label(unsigned i) { return i == 1 ? "a" : "a^" + std::to_string(i); }

}  // namespace

TEST_CASE("point models") {
  const RingModel c = gw_point(PointBase::C);
  CHECK(c.rank() == 1);
  CHECK(lambda_k(c, c.unit, 1) == c.unit);
  CHECK(lambda_k(c, c.group.scale(5, c.unit), 2) == c.group.scale(10, c.unit));

  const RingModel r = gw_point(PointBase::R);
  CHECK(multiply(r, r.basis(1), r.basis(1)) == r.unit);
  CHECK(lambda_k(r, r.basis(1), 2).is_zero());
  CHECK(parse_base("R") == PointBase::R);
  CHECK_THROWS_AS(parse_base("Q"), std::invalid_argument);
}

TEST_CASE("projective space group structure in all three congruence classes") {
  for (auto base : {PointBase::C, PointBase::R})
    for (unsigned r = 1; r <= max_projective_dimension; ++r) {
      CAPTURE(r);
      const RingModel m = gw_projective(base, r);
      const unsigned rho = projective_rho(r);
      CHECK(rho == (r + 1) / 2);
      const std::size_t nb = base == PointBase::C ? 1 : 2;
      const unsigned top = r % 4 == 3 ? rho - 1 : rho;
      REQUIRE(m.rank() == nb + top);
      for (unsigned i = 1; i <= top; ++i) {
        CHECK(m.group.orders()[nb + i - 1] == ((i == rho && r % 4 == 1) ? 2 : 0));
        CHECK(power(m, m.basis(nb), i) == m.basis(m.index_of(a_label(i))));
      }
      CHECK(power(m, m.basis(nb), top + 1).is_zero());
      if (base == PointBase::R) CHECK(multiply(m, m.basis(1), m.basis(nb)) == m.basis(nb));
    }
  CHECK_THROWS_AS(gw_projective(PointBase::C, 0), std::out_of_range);
  CHECK_THROWS_AS(gw_projective(PointBase::C, max_projective_dimension + 1), std::out_of_range);
}

TEST_CASE("a_k recursion and the h_r identity") {
  for (auto base : {PointBase::C, PointBase::R})
    for (unsigned r = 1; r <= 11; ++r) {
      CAPTURE(r);
      const RingModel m = gw_projective(base, r);
      const AkReport rep = check_ak_recursion(m, r, 6);
      CHECK(rep.zero_constant_term);
      CHECK(rep.monic);
      CHECK(rep.h_identity.has_value() == (r % 2 == 1));
      CHECK(rep.ok());
    }
}

TEST_CASE("a_k is an H(line - 1) class") {
  const RingModel m = gw_projective(PointBase::R, 6);
  const auto ak = ak_sequence(m, projective_rho(6));
  for (std::size_t k = 1; k < ak.size(); ++k) {
    // lambda_t(a_k) = 1 + a_k t / (1 + t)^2, so gamma_t(a_k) = 1 + a_k t - a_k t^2.
    const ModelSeries g = gamma_total(m, ak[k], 8);
    CHECK(g[1] == ak[k]);
    CHECK(g[2] == m.group.neg(ak[k]));
    for (std::size_t i = 3; i <= 8; ++i) CHECK(g[i].is_zero());
  }
}

TEST_CASE("projective plane over R: adams operation and lambda^2") {
  const RingModel m = gw_projective(PointBase::R, 2);
  const GroupElement e = el(m, {{"a", 1}, {"1", 1}, {"L", 1}});
  // <1,-1,-1> = 1 + 2L.
  const GroupElement form = el(m, {{"1", 1}, {"L", 2}});
  const GroupElement expected = m.group.add(m.group.scale(-2, form), m.group.scale(4, e));
  CHECK(psi_k(m, e, 2) == expected);
  CHECK_FALSE(psi_k(m, e, 2) == m.group.scale(2, m.unit));
  CHECK(lambda_k(m, e, 2) == m.basis(m.index_of("L")));
}

TEST_CASE("punctured line relations") {
  const RingModel m = gw_punctured_line();
  const GroupElement eps = m.basis(m.index_of("eps")), l = m.basis(m.index_of("L"));
  CHECK(multiply(m, eps, eps) == m.group.scale(-2, eps));
  CHECK(multiply(m, l, eps) == m.group.neg(eps));
  const ModelSeries g = gamma_total(m, eps, 8);
  CHECK(g[1] == eps);
  for (std::size_t i = 2; i <= 8; ++i) CHECK(g[i].is_zero());
  CHECK(lambda_k(m, m.group.add(m.unit, eps), 2).is_zero());
}

TEST_CASE("punctured five-space coefficients") {
  // Independent evaluation: C(2^{f-1}, i) 2^i must be divisible by 2^f.
  for (unsigned f = 2; f <= 8; ++f) {
    const IntVector c = a5_gamma_coefficients(f, 12);
    const Int big = Int(1) << (f - 1);
    for (std::size_t i = 1; i <= 12; ++i) {
      Int num = binomial(big, static_cast<long>(i)) * (Int(1) << static_cast<unsigned>(i));
      const Int den = Int(1) << f;
      REQUIRE(num % den == 0);
      CHECK(c[i] == num / den);
    }
    CHECK(c[1] == 1);
  }
  CHECK(a5_gamma_coefficients(3, 4) == IntVector{1, 1, 3, 4, 2});
  for (unsigned f = 3; f <= 5; ++f) {
    const RingModel m = gw_punctured_a5(f);
    const GroupElement eps = m.basis(1);
    CHECK(gamma_k(m, eps, 2) == eps);
    for (std::size_t i = 3; i <= 8; ++i) CHECK(gamma_k(m, eps, i).is_zero());
    CHECK(multiply(m, eps, eps).is_zero());
  }
  CHECK_THROWS_AS(gw_punctured_a5(1), std::invalid_argument);
}

TEST_CASE("surface products") {
  for (unsigned s = 1; s <= 3; ++s) {
    const RingModel m = gw_surface_cxp1(s);
    const GroupElement c = m.basis(m.index_of("c"));
    for (unsigned j = 1; j <= s; ++j) {
      const GroupElement aj = m.basis(m.index_of("a" + std::to_string(j)));
      const GroupElement dj = m.basis(m.index_of("d" + std::to_string(j)));
      CHECK(multiply(m, aj, c) == m.group.add(dj, c));
      for (unsigned k = 0; k <= s; ++k)
        CHECK(multiply(m, aj, m.basis(m.index_of("d" + std::to_string(k)))) == m.group.add(dj, c));
    }
  }
}

TEST_CASE("builtin dispatch") {
  BuiltinParams p;
  p.base = PointBase::C;
  p.r = 5;
  CHECK(builtin_model("gw_projective", p).name == "gw_projective_C_r5");
  CHECK(builtin_model("gw_point_R", {}).name == "gw_point_R");
  CHECK(builtin_model("gw_surface_cxp1", {}).name == "gw_surface_cxp1_s1");
  CHECK_THROWS_AS(builtin_model("gw_projective", {}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_model("nope", {}), std::invalid_argument);
  CHECK(builtin_names().size() == 5);
}
