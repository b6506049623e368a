#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "qk/error.hpp"
#include "qk/qde.hpp"

using namespace qk;
namespace fx = qk::fixtures;

namespace {

NovikovDegree deg1(const GitData &g, long value) {
  return make_degree(g, {Rational(value)});
}

ISeries p1_series(const PresentationPtr &pres, long emax) {
  return i_series(pres, Rational(emax), {{-emax, emax}});
}

}  // namespace

TEST_CASE("apply_m on the degree-zero unit term") {
  GitData p1 = fx::proj_space(2);
  auto pres = build_presentation(p1);
  ISeries s = p1_series(pres, 2);
  ISeries m = apply_m(1, s);
  const ZetaElement *c0 = m.series.coefficient(zero_degree(p1));
  REQUIRE(c0);
  // mu(0) = 0: the unit picks up exactly the divisor class D
  ZetaElement expected(pres);
  expected.add_term(0, Poly::variable(1, 0));
  CHECK(*c0 == expected);
}

TEST_CASE("apply_m telescopes on the P1 degree-one term") {
  GitData p1 = fx::proj_space(2);
  auto pres = build_presentation(p1);
  ISeries s = p1_series(pres, 2);
  Poly u = Poly::variable(1, 0);

  ISeries once = apply_m(1, s);
  const ZetaElement *c1 = once.series.coefficient(deg1(p1, 1));
  REQUIRE(c1);
  // (D + zeta)(zeta^{-2} - 2 D zeta^{-3}) = zeta^{-1} - D zeta^{-2}
  ZetaElement expected(pres);
  expected.add_term(-1, Poly::constant(1, Rational(1)));
  expected.add_term(-2, u.scaled(Rational(-1)));
  CHECK(*c1 == expected);

  ISeries twice = apply_m(2, once);
  const ZetaElement *c2 = twice.series.coefficient(deg1(p1, 1));
  REQUIRE(c2);
  CHECK(*c2 == ZetaElement::unit(pres));
}

TEST_CASE("apply_m operators commute") {
  GitData pp = fx::p1xp1();
  auto pres = build_presentation(pp);
  ISeries s = i_series(pres, Rational(3), {{-3, 3}, {-3, 3}});
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      CHECK(apply_m(i, apply_m(j, s)).series ==
            apply_m(j, apply_m(i, s)).series);
    }
  }
  CHECK_THROWS_AS(apply_m(5, s), Error);
}

TEST_CASE("box operator construction") {
  GitData wp = fx::wp23();
  BoxOperator op = make_box_operator(wp, deg1(wp, 1));
  CHECK(op.up_exponents == std::vector<long>{2, 3});
  CHECK(op.down_exponents == std::vector<long>{0, 0});

  GitData local = fx::local_p1();
  BoxOperator mixed = make_box_operator(local, deg1(local, 1));
  CHECK(mixed.up_exponents == std::vector<long>{1, 1, 0});
  CHECK(mixed.down_exponents == std::vector<long>{0, 0, 1});

  CHECK_THROWS_AS(make_box_operator(wp, deg1(wp, -1)), Error);
  CHECK_THROWS_AS(make_box_operator(wp, make_degree(wp, {make_rational(1, 2)})),
                  Error);

  // nonzero degree of zero energy
  GitData pp = fx::p1xp1();
  CHECK_THROWS_AS(
      make_box_operator(pp, make_degree(pp, {Rational(1), Rational(-1)})),
      Error);
}

TEST_CASE("an empty verification window is rejected") {
  GitData p1 = fx::proj_space(2);
  auto pres = build_presentation(p1);
  ISeries s = p1_series(pres, 2);
  BoxOperator op = make_box_operator(p1, deg1(p1, 3));
  CHECK_THROWS_AS(check_annihilation(op, s), Error);
}

TEST_CASE("box of degree zero annihilates trivially") {
  GitData p1 = fx::proj_space(2);
  auto pres = build_presentation(p1);
  ISeries s = p1_series(pres, 3);
  BoxOperator zero = make_box_operator(p1, deg1(p1, 0));
  AnnihilationReport report = check_annihilation(zero, s);
  CHECK(report.ok);
  CHECK(report.residual.series.is_zero());
}

TEST_CASE("annihilation for P1 at energy four") {
  GitData p1 = fx::proj_space(2);
  auto pres = build_presentation(p1);
  ISeries s = p1_series(pres, 4);
  AnnihilationReport report =
      check_annihilation(make_box_operator(p1, deg1(p1, 1)), s);
  CHECK(report.ok);
  CHECK(report.verified_energy == Rational(4));
  CHECK(report.validity_floor == Rational(1));
  CHECK(report.residual.series.is_zero());
}

TEST_CASE("annihilation for the weighted projective line") {
  GitData wp = fx::wp23();
  auto pres = build_presentation(wp);
  ISeries s = i_series(pres, Rational(5), {{-5, 5}});
  AnnihilationReport report =
      check_annihilation(make_box_operator(wp, deg1(wp, 1)), s);
  CHECK(report.ok);
  CHECK(report.validity_floor == Rational(1));
  CHECK(report.residual.series.is_zero());
}

TEST_CASE("the validity floor excludes the undetermined window") {
  // Below energy(d) the truncated series cannot represent the degrees the
  // operator pairs against. On the weighted line the excluded degree-zero
  // output of the up-product is the nonzero class
  // D1 (D1 - z) D2 (D2 - z)(D2 - 2z); it must not be reported as residual.
  GitData wp = fx::wp23();
  auto pres = build_presentation(wp);

  ZetaElement boundary = ZetaElement::unit(pres);
  RingElement d1 = pres->divisor_class(1);
  RingElement d2 = pres->divisor_class(2);
  boundary = boundary.times_linear(d1, Rational(0));
  boundary = boundary.times_linear(d1, Rational(-1));
  boundary = boundary.times_linear(d2, Rational(0));
  boundary = boundary.times_linear(d2, Rational(-1));
  boundary = boundary.times_linear(d2, Rational(-2));
  CHECK_FALSE(boundary.is_zero());

  ISeries s = i_series(pres, Rational(3), {{-3, 3}});
  ISeries residual = apply_box(make_box_operator(wp, deg1(wp, 1)), s);
  CHECK(residual.series.is_zero());
  for (const auto &[degree, coeff] : residual.series.terms()) {
    CHECK(degree.energy >= Rational(1));
  }
}

TEST_CASE("annihilation with quantum-side factors") {
  // O(-1): the down product is a single divisor operator.
  GitData local = fx::local_p1();
  auto pres = build_presentation(local);
  ISeries s = i_series(pres, Rational(4), {{-4, 4}});
  AnnihilationReport report =
      check_annihilation(make_box_operator(local, deg1(local, 1)), s);
  CHECK(report.ok);
  CHECK(report.residual.series.is_zero());

  // O(-2): the down product is a genuine two-step descending factorial.
  GitData k2 = fx::local_p1_k2();
  auto pres2 = build_presentation(k2);
  BoxOperator op2 = make_box_operator(k2, deg1(k2, 1));
  CHECK(op2.down_exponents == std::vector<long>{0, 0, 2});
  ISeries s2 = i_series(pres2, Rational(4), {{-4, 4}});
  AnnihilationReport report2 = check_annihilation(op2, s2);
  CHECK(report2.ok);
  CHECK(report2.residual.series.is_zero());
}

TEST_CASE("annihilation on the first Hirzebruch surface") {
  // Rank two, mixed signs and a non-monomial Groebner basis at once.
  GitData f1 = fx::hirzebruch1();
  auto pres = build_presentation(f1);
  ISeries s = i_series(pres, Rational(3), {{-3, 3}, {-3, 3}});
  for (const RationalVector &dv :
       {RationalVector{Rational(1), Rational(0)},
        RationalVector{Rational(0), Rational(1)}}) {
    BoxOperator op = make_box_operator(f1, make_degree(f1, dv));
    AnnihilationReport report = check_annihilation(op, s);
    CHECK(report.ok);
    CHECK(report.residual.series.is_zero());
  }
  BoxOperator fiber =
      make_box_operator(f1, make_degree(f1, {Rational(1), Rational(0)}));
  CHECK(fiber.down_exponents == std::vector<long>{0, 0, 0, 1});
}

TEST_CASE("annihilation for a degree with a negative component") {
  // nu = (2,1): the degree (1,-1) has energy 1 and a mixed sign pattern,
  // and the divisor class of the first coordinate dies classically.
  GitData g = fx::rank2_chamber();
  auto pres = build_presentation(g);
  CHECK(pres->divisor_class(1).is_zero());
  ISeries s = i_series(pres, Rational(3), {{-3, 3}, {-3, 3}});
  BoxOperator op =
      make_box_operator(g, make_degree(g, {Rational(1), Rational(-1)}));
  CHECK(op.up_exponents == std::vector<long>{1, 0, 0});
  CHECK(op.down_exponents == std::vector<long>{0, 1, 0});
  AnnihilationReport report = check_annihilation(op, s);
  CHECK(report.ok);
  CHECK(report.residual.series.is_zero());
}

TEST_CASE("a perturbed operator leaves a residual") {
  GitData p1 = fx::proj_space(2);
  auto pres = build_presentation(p1);
  ISeries s = p1_series(pres, 2);

  // M1 M2 - 2q instead of M1 M2 - q
  ISeries up = apply_m(2, apply_m(1, s));
  NovikovSeries<ZetaElement> shifted =
      nov_shift(s.series, deg1(p1, 1));
  NovikovSeries<ZetaElement> residual = up.series;
  for (const auto &[degree, coeff] : shifted.terms()) {
    residual.add_term(degree, coeff.scaled(Rational(-2)));
  }
  residual = nov_restrict_min_energy(residual, Rational(1));
  CHECK_FALSE(residual.is_zero());

  const ZetaElement *c1 = nullptr;
  for (const auto &[degree, coeff] : residual.terms()) {
    if (degree.d[0] == Rational(1)) c1 = &coeff;
  }
  REQUIRE(c1);
  // telescoping gives +1, the perturbed shift gives -2: residual -1 = -q * 1
  ZetaElement expected = ZetaElement::unit(pres).scaled(Rational(-1));
  CHECK(*c1 == expected);
}

TEST_CASE("symbols equal the quantum Stanley-Reisner generators") {
  std::mt19937 rng(8675309);
  std::vector<GitData> fixtures = {fx::proj_space(2), fx::wp23(), fx::p1xp1(),
                                   fx::local_p1()};
  for (const GitData &g : fixtures) {
    std::uniform_int_distribution<int> entry(-4, 4);
    int accepted = 0;
    while (accepted < 20) {
      RationalVector v(g.r());
      for (auto &x : v) x = Rational(entry(rng));
      NovikovDegree d = make_degree(g, v);
      if (d.energy < 0 || (d.energy == 0 && !is_zero_vector(d.d))) continue;
      ++accepted;
      BoxOperator op = make_box_operator(g, d);
      CHECK(symbol(op, g) == qsr_generator(g, d));
    }
  }
}

TEST_CASE("symbol examples") {
  GitData p1 = fx::proj_space(2);
  BoxOperator op1 = make_box_operator(p1, deg1(p1, 1));
  QsrGenerator s1 = symbol(op1, p1);
  CHECK(s1.classical_part == Poly::variable(1, 0).pow(2));
  CHECK(s1.quantum_part == Poly::constant(1, Rational(1)));

  GitData wp = fx::wp23();
  QsrGenerator s2 = symbol(make_box_operator(wp, deg1(wp, 1)), wp);
  CHECK(s2.classical_part == Poly::variable(1, 0).pow(5).scaled(Rational(108)));

  QsrGenerator s0 = symbol(make_box_operator(p1, deg1(p1, 0)), p1);
  CHECK(s0.classical_part == Poly::constant(1, Rational(1)));
  CHECK(s0.quantum_part == Poly::constant(1, Rational(1)));
}
