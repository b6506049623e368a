#include "qk/qkirwan.hpp"

#include "qk/cone.hpp"
#include "qk/error.hpp"

namespace qk {

namespace {

void require_integral(const GitData &g, const NovikovDegree &d) {
  if (d.d.size() != g.r()) throw_invalid("degree vector length must equal rank");
  for (std::size_t j = 1; j <= g.k(); ++j) {
    if (!is_integer(g.pairing(static_cast<int>(j), d.d))) {
      throw_precondition("degree must pair integrally with every weight");
    }
  }
}

}  // namespace

QsrGenerator qsr_generator(const GitData &g, const NovikovDegree &d) {
  require_integral(g, d);
  int r = static_cast<int>(g.r());
  QsrGenerator gen;
  gen.d = d;
  gen.classical_part = Poly::constant(r, Rational(1));
  gen.quantum_part = Poly::constant(r, Rational(1));
  for (std::size_t j = 1; j <= g.k(); ++j) {
    long c = to_long(g.pairing(static_cast<int>(j), d.d));
    if (c == 0) continue;
    Poly form = Poly::linear_form(g.weight_column(static_cast<int>(j)));
    if (c > 0) {
      gen.classical_part = gen.classical_part * form.pow(static_cast<int>(c));
    } else {
      gen.quantum_part = gen.quantum_part * form.pow(static_cast<int>(-c));
    }
  }
  return gen;
}

std::vector<QsrGenerator> qsr_generators(const GitData &g,
                                         const std::vector<NovikovDegree> &ds) {
  std::vector<QsrGenerator> out;
  out.reserve(ds.size());
  for (const auto &d : ds) out.push_back(qsr_generator(g, d));
  return out;
}

EquivariantQsrGenerator equivariant_qsr_generator(const GitData &g,
                                                  const NovikovDegree &d) {
  require_integral(g, d);
  int k = static_cast<int>(g.k());
  EquivariantQsrGenerator gen;
  gen.d = d;
  gen.classical_part = Poly::constant(k, Rational(1));
  gen.quantum_part = Poly::constant(k, Rational(1));
  for (int j = 1; j <= k; ++j) {
    long c = to_long(g.pairing(j, d.d));
    if (c == 0) continue;
    Poly var = Poly::variable(k, j - 1);
    if (c > 0) {
      gen.classical_part = gen.classical_part * var.pow(static_cast<int>(c));
    } else {
      gen.quantum_part = gen.quantum_part * var.pow(static_cast<int>(-c));
    }
  }
  return gen;
}

KirwanLeadingTerm kirwan_leading(const GitData &g, const PresentationPtr &pres,
                                 const NovikovDegree &d) {
  require_integral(g, d);
  std::vector<RationalVector> nonneg_weights;
  for (std::size_t j = 1; j <= g.k(); ++j) {
    if (g.pairing(static_cast<int>(j), d.d) >= 0) {
      RationalVector col = g.weight_column(static_cast<int>(j));
      for (auto &x : col) x = -x;
      nonneg_weights.push_back(std::move(col));
    }
  }
  bool span_ok = linear_span_contains(nonneg_weights, g.polarization());
  if (!span_ok) {
    throw_precondition(
        "leading-order hypothesis violated: polarization is not in the span "
        "of the weights pairing nonnegatively with the degree");
  }
  bool cone_ok = cone_contains(nonneg_weights, g.polarization());

  int r = static_cast<int>(g.r());
  KirwanLeadingTerm term;
  term.d = d;
  term.input_monomial = Poly::constant(r, Rational(1));
  Poly output_poly = Poly::constant(r, Rational(1));
  for (std::size_t j = 1; j <= g.k(); ++j) {
    long c = to_long(g.pairing(static_cast<int>(j), d.d));
    Poly form = Poly::linear_form(g.weight_column(static_cast<int>(j)));
    if (c >= 0) {
      term.input_monomial = term.input_monomial * form.pow(static_cast<int>(c));
    } else {
      output_poly = output_poly * form.pow(static_cast<int>(-c));
    }
  }
  term.output = pres->normal_form(output_poly);
  term.modulo_note = "modulo higher order: terms q^d' of larger energy";
  term.interpretation =
      "divisor classes reduced in the untwisted-sector presentation";
  term.span_cone_disagree = (span_ok != cone_ok);
  return term;
}

}  // namespace qk
