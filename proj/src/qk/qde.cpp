#include "qk/qde.hpp"

#include "qk/error.hpp"

namespace qk {

namespace {

// Multiplies each degree-d' coefficient by (D_j + (<mu_j,d'> + offset) zeta).
ISeries apply_m_offset(int j, const Rational &offset, const ISeries &s) {
  const GitData &g = s.presentation->git();
  if (j < 1 || static_cast<std::size_t>(j) > g.k()) {
    throw_invalid("coordinate index out of range");
  }
  RingElement divisor = s.presentation->divisor_class(j);
  ISeries out{s.presentation,
              NovikovSeries<ZetaElement>(s.series.rank(), s.series.cutoff())};
  for (const auto &[degree, coeff] : s.series.terms()) {
    Rational m = g.pairing(j, degree.d) + offset;
    out.series.add_term(degree, coeff.times_linear(divisor, m));
  }
  return out;
}

}  // namespace

BoxOperator make_box_operator(const GitData &g, const NovikovDegree &d) {
  if (d.d.size() != g.r()) throw_invalid("degree vector length must equal rank");
  for (std::size_t j = 1; j <= g.k(); ++j) {
    if (!is_integer(g.pairing(static_cast<int>(j), d.d))) {
      throw_precondition("operator degree must pair integrally with weights");
    }
  }
  if (d.energy < 0) {
    throw_precondition("operator degree must have nonnegative energy");
  }
  if (d.energy == 0 && !is_zero_vector(d.d)) {
    throw_precondition(
        "nonzero degree of zero energy is incompatible with truncation");
  }
  BoxOperator op;
  op.d = d;
  for (std::size_t j = 1; j <= g.k(); ++j) {
    long c = to_long(g.pairing(static_cast<int>(j), d.d));
    op.up_exponents.push_back(c > 0 ? c : 0);
    op.down_exponents.push_back(c < 0 ? -c : 0);
  }
  return op;
}

ISeries apply_m(int j, const ISeries &s) {
  return apply_m_offset(j, Rational(0), s);
}

ISeries apply_box(const BoxOperator &op, const ISeries &s) {
  const GitData &g = s.presentation->git();
  if (op.up_exponents.size() != g.k()) {
    throw_invalid("operator does not match the GIT datum");
  }
  if (op.d.d.size() != s.series.rank()) {
    throw_invalid("operator and series rank mismatch");
  }

  ISeries up = s;
  for (std::size_t j = 1; j <= g.k(); ++j) {
    for (long m = 0; m < op.up_exponents[j - 1]; ++m) {
      up = apply_m_offset(static_cast<int>(j), Rational(-m), up);
    }
  }
  ISeries down = s;
  for (std::size_t j = 1; j <= g.k(); ++j) {
    for (long m = 0; m < op.down_exponents[j - 1]; ++m) {
      down = apply_m_offset(static_cast<int>(j), Rational(-m), down);
    }
  }

  NovikovSeries<ZetaElement> shifted = nov_shift(down.series, op.d);
  NovikovSeries<ZetaElement> residual = up.series;
  for (const auto &[degree, coeff] : shifted.terms()) {
    residual.add_term(degree, coeff.scaled(Rational(-1)));
  }
  residual = nov_restrict_min_energy(residual, op.d.energy);
  return ISeries{s.presentation, std::move(residual)};
}

AnnihilationReport check_annihilation(const BoxOperator &op, const ISeries &s) {
  if (op.d.energy > s.series.cutoff()) {
    throw_precondition(
        "operator degree energy exceeds the series cutoff; the verification "
        "window is empty");
  }
  AnnihilationReport report{apply_box(op, s), s.series.cutoff(), op.d.energy,
                            false};
  report.ok = report.residual.series.is_zero();
  return report;
}

QsrGenerator symbol(const BoxOperator &op, const GitData &g) {
  int r = static_cast<int>(g.r());
  QsrGenerator gen;
  gen.d = op.d;
  gen.classical_part = Poly::constant(r, Rational(1));
  gen.quantum_part = Poly::constant(r, Rational(1));
  for (std::size_t j = 1; j <= g.k(); ++j) {
    Poly form = Poly::linear_form(g.weight_column(static_cast<int>(j)));
    if (op.up_exponents[j - 1] > 0) {
      gen.classical_part =
          gen.classical_part *
          form.pow(static_cast<int>(op.up_exponents[j - 1]));
    }
    if (op.down_exponents[j - 1] > 0) {
      gen.quantum_part = gen.quantum_part *
                         form.pow(static_cast<int>(op.down_exponents[j - 1]));
    }
  }
  return gen;
}

}  // namespace qk
