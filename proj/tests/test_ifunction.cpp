#include "doctest.h"
#include "fixtures.hpp"
#include "qk/error.hpp"
#include "qk/ifunction.hpp"

using namespace qk;
namespace fx = qk::fixtures;

namespace {

ZetaElement zeta_monomials(const PresentationPtr &pres,
                           std::initializer_list<std::pair<int, Poly>> terms) {
  ZetaElement z(pres);
  for (const auto &[e, p] : terms) z.add_term(e, pres->normal_form(p).value);
  return z;
}

NovikovDegree deg1(const GitData &g, long value) {
  return make_degree(g, {Rational(value)});
}

}  // namespace

TEST_CASE("degree factor at zero is the unit") {
  for (const GitData &g : {fx::proj_space(2), fx::wp23(), fx::p1xp1()}) {
    auto pres = build_presentation(g);
    NovikovDegree zero = zero_degree(g);
    CHECK(degree_factor(pres, zero) == ZetaElement::unit(pres));
  }
}

TEST_CASE("degree factor of P1 at degree one") {
  auto pres = build_presentation(fx::proj_space(2));
  Poly u = Poly::variable(1, 0);
  // (D + zeta)^{-2} = zeta^{-2} - 2 D zeta^{-3} once D^2 = 0
  ZetaElement expected = zeta_monomials(
      pres, {{-2, Poly::constant(1, Rational(1))}, {-3, u.scaled(Rational(-2))}});
  CHECK(degree_factor(pres, deg1(fx::proj_space(2), 1)) == expected);
}

TEST_CASE("degree factor of P2 at degree one") {
  GitData p2 = fx::proj_space(3);
  auto pres = build_presentation(p2);
  Poly u = Poly::variable(1, 0);
  // (D + zeta)^{-3} = zeta^{-3} - 3 D zeta^{-4} + 6 D^2 zeta^{-5}
  ZetaElement expected = zeta_monomials(
      pres, {{-3, Poly::constant(1, Rational(1))},
             {-4, u.scaled(Rational(-3))},
             {-5, u.pow(2).scaled(Rational(6))}});
  CHECK(degree_factor(pres, deg1(p2, 1)) == expected);
}

TEST_CASE("degree factor rejects fractional pairings") {
  GitData wp = fx::wp23();
  auto pres = build_presentation(wp);
  NovikovDegree half = make_degree(wp, {make_rational(1, 2)});
  CHECK_THROWS_AS(degree_factor(pres, half), Error);
}

TEST_CASE("i_series of P1 to energy two") {
  GitData p1 = fx::proj_space(2);
  auto pres = build_presentation(p1);
  ISeries s = i_series(pres, Rational(2), {{-2, 2}});
  REQUIRE(s.series.terms().size() == 3);

  Poly u = Poly::variable(1, 0);
  const ZetaElement *c0 = s.series.coefficient(zero_degree(p1));
  REQUIRE(c0);
  CHECK(*c0 == ZetaElement::unit(pres));

  const ZetaElement *c1 = s.series.coefficient(deg1(p1, 1));
  REQUIRE(c1);
  CHECK(*c1 == zeta_monomials(pres, {{-2, Poly::constant(1, Rational(1))},
                                     {-3, u.scaled(Rational(-2))}}));

  // [(D+zeta)(D+2 zeta)]^{-2} = 1/4 zeta^{-4} - 3/4 D zeta^{-5}
  const ZetaElement *c2 = s.series.coefficient(deg1(p1, 2));
  REQUIRE(c2);
  CHECK(*c2 == zeta_monomials(pres, {{-4, Poly::constant(1, make_rational(1, 4))},
                                     {-5, u.scaled(make_rational(-3, 4))}}));
}

TEST_CASE("i_series drops coefficients that die in the ring") {
  GitData pp = fx::p1xp1();
  auto pres = build_presentation(pp);
  ISeries s = i_series(pres, Rational(2), {{-2, 2}, {-2, 2}});
  // mixed-sign degrees like (1,-1) reduce to zero and are dropped
  CHECK(s.series.coefficient(make_degree(pp, {Rational(1), Rational(-1)})) ==
        nullptr);
  CHECK(s.series.coefficient(make_degree(pp, {Rational(2), Rational(-1)})) ==
        nullptr);
  // straight-line degrees survive
  CHECK(s.series.coefficient(make_degree(pp, {Rational(1), Rational(0)})) !=
        nullptr);
  CHECK(s.series.coefficient(make_degree(pp, {Rational(1), Rational(1)})) !=
        nullptr);
}

TEST_CASE("fractional degrees are enumerable but skipped by the series") {
  GitData wp = fx::wp23();
  auto pres = build_presentation(wp);
  ISeries s = i_series(pres, Rational(1), {{-6, 6}}, 6);
  // the enumeration sees 0, 1/6, ..., 1 but only integral pairings enter
  REQUIRE(s.series.terms().size() == 2);
  CHECK(s.series.coefficient(zero_degree(wp)) != nullptr);
  CHECK(s.series.coefficient(make_degree(wp, {Rational(1)})) != nullptr);
  CHECK(s.series.coefficient(make_degree(wp, {make_rational(1, 2)})) ==
        nullptr);
}

TEST_CASE("i_series requires the zero degree") {
  GitData p1 = fx::proj_space(2);
  auto pres = build_presentation(p1);
  CHECK_THROWS_AS(i_series(pres, Rational(2), {{1, 2}}), Error);
}

TEST_CASE("leading zeta exponent and coefficient") {
  // For degrees with all pairings nonnegative the top zeta power is
  // -sum(mu_j(d)) with coefficient prod 1/(mu_j(d)!) adjusted per factor.
  struct Case {
    GitData g;
    std::vector<RationalVector> degrees;
  };
  std::vector<Case> cases = {
      {fx::proj_space(2), {{Rational(1)}, {Rational(2)}, {Rational(3)}}},
      {fx::wp23(), {{Rational(1)}, {Rational(2)}}},
      {fx::p1xp1(),
       {{Rational(1), Rational(0)}, {Rational(1), Rational(1)},
        {Rational(2), Rational(1)}}},
  };
  for (const auto &c : cases) {
    auto pres = build_presentation(c.g);
    for (const auto &dv : c.degrees) {
      NovikovDegree d = make_degree(c.g, dv);
      Support support = limit_support(c.g, d.d);
      REQUIRE(support.semistable);
      long top = 0;
      for (std::size_t j = 1; j <= c.g.k(); ++j) {
        Rational p = c.g.pairing(static_cast<int>(j), d.d);
        if (p > 0) top += to_long(p);
      }
      ZetaElement factor = degree_factor(pres, d);
      CHECK(factor.max_zeta_exponent() == -top);
      const Poly &lead = factor.terms().at(-static_cast<int>(top));
      CHECK(lead.is_constant());
      CHECK_FALSE(lead.is_zero());
    }
  }

  // Mixed-sign semistable degree on the local fixture: top coefficient is a
  // nonzero multiple of the product of negative-pairing divisor classes.
  GitData local = fx::local_p1();
  auto pres = build_presentation(local);
  NovikovDegree d = make_degree(local, {Rational(1)});
  CHECK(limit_support(local, d.d).semistable);
  ZetaElement factor = degree_factor(pres, d);
  // up factors (D+z)^{-1}(D+z)^{-1}, down factor D3 = -u
  CHECK(factor.max_zeta_exponent() == -2);
  CHECK(factor.terms().at(-2) == Poly::variable(1, 0).scaled(Rational(-1)));
}

TEST_CASE("coefficients are normal-form fixed points") {
  for (const GitData &g : {fx::proj_space(3), fx::wp23(), fx::local_p1()}) {
    auto pres = build_presentation(g);
    ISeries s = i_series(pres, Rational(3), {{-3, 3}});
    for (const auto &[degree, coeff] : s.series.terms()) {
      for (const auto &[e, p] : coeff.terms()) {
        CHECK(pres->normal_form(p).value == p);
      }
    }
  }
}

TEST_CASE("zeta duality involution") {
  for (const GitData &g : {fx::proj_space(2), fx::wp23(), fx::p1xp1()}) {
    auto pres = build_presentation(g);
    std::vector<std::pair<long, long>> box(g.r(), {-3, 3});
    ISeries minus = i_series(pres, Rational(3), box);
    ISeries plus = i_series_opposite(pres, Rational(3), box);
    CHECK(zeta_flip(minus).series == plus.series);
    CHECK(zeta_flip(plus).series == minus.series);
    CHECK(zeta_flip(zeta_flip(minus)).series == minus.series);
  }
}

TEST_CASE("negative degrees vanish in the coarse model") {
  // With the honest curve cohomology (ideal u^2) the degree -1 factor of the
  // weighted line contains D1*D2 = 6u^2 and dies; the quantum-compatible
  // presentation (ideal u^5) keeps it, which is why negative energies stay
  // outside the series contract.
  GitData wp = fx::wp23();
  NovikovDegree minus_one = make_degree(wp, {Rational(-1)});

  auto quantum = build_presentation(wp);
  CHECK_FALSE(degree_factor(quantum, minus_one).is_zero());

  auto coarse = build_presentation(fx::proj_space(2));
  ZetaElement factor(coarse);
  factor = ZetaElement::unit(coarse);
  RingElement d1 = coarse->normal_form(Poly::variable(1, 0).scaled(Rational(2)));
  RingElement d2 = coarse->normal_form(Poly::variable(1, 0).scaled(Rational(3)));
  // numerator factors m = -1..0 for weight 2 and m = -2..0 for weight 3
  factor = factor.times_linear(d1, Rational(-1));
  factor = factor.times_linear(d1, Rational(0));
  factor = factor.times_linear(d2, Rational(-2));
  factor = factor.times_linear(d2, Rational(-1));
  factor = factor.times_linear(d2, Rational(0));
  CHECK(factor.is_zero());
}
