#include "qk/ifunction.hpp"

#include "qk/error.hpp"

namespace qk {

namespace {

ZetaElement degree_factor_signed(const PresentationPtr &pres,
                                 const NovikovDegree &d, int zeta_sign) {
  const GitData &g = pres->git();
  if (d.d.size() != g.r()) throw_invalid("degree vector length must equal rank");
  for (std::size_t j = 1; j <= g.k(); ++j) {
    if (!is_integer(g.pairing(static_cast<int>(j), d.d))) {
      throw_precondition(
          "non-integral weight pairing: fractional degrees are not supported "
          "by the degree factor");
    }
  }
  ZetaElement factor = ZetaElement::unit(pres);
  for (std::size_t j = 1; j <= g.k(); ++j) {
    long c = to_long(g.pairing(static_cast<int>(j), d.d));
    RingElement divisor = pres->divisor_class(static_cast<int>(j));
    if (c > 0) {
      for (long m = 1; m <= c; ++m) {
        factor = factor.times_inverse_linear(divisor, Rational(zeta_sign * m));
      }
    } else if (c < 0) {
      for (long m = c + 1; m <= 0; ++m) {
        factor = factor.times_linear(divisor, Rational(zeta_sign * m));
        if (factor.is_zero()) return factor;
      }
    }
  }
  return factor;
}

ISeries i_series_signed(const PresentationPtr &pres, const Rational &e_max,
                        const std::vector<std::pair<long, long>> &box,
                        long denominator, int zeta_sign) {
  const GitData &g = pres->git();
  if (!pres->finite_dimensional()) {
    throw_precondition(
        "I-function requires a finite-dimensional quotient ring");
  }
  DegreeEnumeration enumeration = enumerate_degrees(g, e_max, box, denominator);
  ISeries result{pres, NovikovSeries<ZetaElement>(g.r(), e_max)};
  bool has_zero_degree = false;
  for (const NovikovDegree &d : enumeration.degrees) {
    if (!degree_is_integral(g, d)) continue;  // reserved for twisted sectors
    if (is_zero_vector(d.d)) has_zero_degree = true;
    ZetaElement factor = degree_factor_signed(pres, d, zeta_sign);
    result.series.add_term(d, factor);
  }
  if (!has_zero_degree) {
    throw_invalid("enumeration box must contain the zero degree");
  }
  return result;
}

}  // namespace

ZetaElement degree_factor(const PresentationPtr &pres, const NovikovDegree &d) {
  return degree_factor_signed(pres, d, +1);
}

ZetaElement degree_factor_opposite(const PresentationPtr &pres,
                                   const NovikovDegree &d) {
  return degree_factor_signed(pres, d, -1);
}

ISeries i_series(const PresentationPtr &pres, const Rational &e_max,
                 const std::vector<std::pair<long, long>> &box,
                 long denominator) {
  return i_series_signed(pres, e_max, box, denominator, +1);
}

ISeries i_series_opposite(const PresentationPtr &pres, const Rational &e_max,
                          const std::vector<std::pair<long, long>> &box,
                          long denominator) {
  return i_series_signed(pres, e_max, box, denominator, -1);
}

ISeries zeta_flip(const ISeries &s) {
  ISeries out{s.presentation,
              NovikovSeries<ZetaElement>(s.series.rank(), s.series.cutoff())};
  for (const auto &[degree, coeff] : s.series.terms()) {
    out.series.add_term(degree, coeff.zeta_negated());
  }
  return out;
}

}  // namespace qk
