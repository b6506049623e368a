#pragma once

#include "qk/ifunction.hpp"
#include "qk/qkirwan.hpp"

namespace qk {

// The degree-d quantum difference operator: the up-product of the divisor
// multiplication operators minus q^d times the down-product, with
// up/down exponents a_j = max(mu_j(d),0), b_j = max(-mu_j(d),0).
struct BoxOperator {
  NovikovDegree d;
  std::vector<long> up_exponents;
  std::vector<long> down_exponents;
};

// Requires d integral with energy > 0, or d = 0.
BoxOperator make_box_operator(const GitData &g, const NovikovDegree &d);

// The divisor multiplication operator for coordinate j (1-based): the
// degree-d' coefficient is multiplied by (D_j + <mu_j,d'> zeta).
ISeries apply_m(int j, const ISeries &s);

// Applies the box operator. Each exponent-a_j factor is the descending
// product (M_j)(M_j - zeta)...(M_j - (a_j-1) zeta), which is what the a_j-th
// coordinate derivative becomes on a q-power basis; plain operator powers
// M_j^{a_j} agree with it only when a_j <= 1. The result is restricted to
// output energies >= energy(d): below that window the truncated model pairs
// against negative-energy degrees it cannot represent, so those terms are
// undetermined rather than zero.
ISeries apply_box(const BoxOperator &op, const ISeries &s);

struct AnnihilationReport {
  ISeries residual;
  Rational verified_energy;  // the cutoff
  Rational validity_floor;   // energy(d)
  bool ok = false;
};

// ok iff apply_box(op, s) vanishes identically on the verified window.
AnnihilationReport check_annihilation(const BoxOperator &op, const ISeries &s);

// Classical symbol of the operator: exactly the quantum Stanley-Reisner
// generator of the same degree.
QsrGenerator symbol(const BoxOperator &op, const GitData &g);

}  // namespace qk
