#pragma once

#include "qk/zeta.hpp"

namespace qk {

// Energy-truncated I-function: a Novikov series with zeta-Laurent
// quotient-ring coefficients. The degree-0 coefficient is always the unit.
struct ISeries {
  PresentationPtr presentation;
  NovikovSeries<ZetaElement> series;

  const Rational &cutoff() const { return series.cutoff(); }
};

// The hypergeometric factor of one degree d: for each coordinate j with
// c = <mu_j, d> > 0 divide by (D_j + zeta)...(D_j + c zeta); for c < 0
// multiply by (D_j + (c+1) zeta)...(D_j + 0 zeta). All pairings must be
// integral. Exact by nilpotency of the divisor classes.
ZetaElement degree_factor(const PresentationPtr &pres, const NovikovDegree &d);

// Same factor with zeta replaced by -zeta throughout (the opposite-fixed-
// point convention); used to realize the duality involution independently.
ZetaElement degree_factor_opposite(const PresentationPtr &pres,
                                   const NovikovDegree &d);

// Sum of q^d * degree_factor(d) over the enumerated degrees with integral
// pairings; coefficients reducing to zero in the ring are dropped. The box
// must contain the zero degree.
ISeries i_series(const PresentationPtr &pres, const Rational &e_max,
                 const std::vector<std::pair<long, long>> &box,
                 long denominator = 1);

// Companion series built from degree_factor_opposite.
ISeries i_series_opposite(const PresentationPtr &pres, const Rational &e_max,
                          const std::vector<std::pair<long, long>> &box,
                          long denominator = 1);

// zeta -> -zeta termwise; an exact involution exchanging the two series.
ISeries zeta_flip(const ISeries &s);

}  // namespace qk
