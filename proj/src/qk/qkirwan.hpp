#pragma once

#include <string>

#include "qk/novikov.hpp"
#include "qk/ring.hpp"

namespace qk {

// One quantum Stanley-Reisner generator: classical_part - q^d * quantum_part
// with classical_part = prod_{mu_j(d)>0} mu_j^{mu_j(d)} and quantum_part =
// prod_{mu_j(d)<0} mu_j^{-mu_j(d)}, both in the r torus variables.
struct QsrGenerator {
  NovikovDegree d;
  Poly classical_part;
  Poly quantum_part;

  bool operator==(const QsrGenerator &other) const {
    return d == other.d && classical_part == other.classical_part &&
           quantum_part == other.quantum_part;
  }
};

// The same generator before restriction: a polynomial identity in the k
// independent coordinate variables v_1..v_k.
struct EquivariantQsrGenerator {
  NovikovDegree d;
  Poly classical_part;  // k variables
  Poly quantum_part;    // k variables
};

// Leading-order image of the degree-d quantum Kirwan map: the input monomial
// prod_{mu_j(d)>=0} mu_j^{mu_j(d)} maps to q^d times the reduced class of
// prod_{mu_j(d)<=0} mu_j^{-mu_j(d)}, modulo higher energy.
struct KirwanLeadingTerm {
  NovikovDegree d;
  Poly input_monomial;
  RingElement output;
  std::string modulo_note;
  std::string interpretation;
  bool span_cone_disagree = false;
};

QsrGenerator qsr_generator(const GitData &g, const NovikovDegree &d);

std::vector<QsrGenerator> qsr_generators(const GitData &g,
                                         const std::vector<NovikovDegree> &ds);

EquivariantQsrGenerator equivariant_qsr_generator(const GitData &g,
                                                  const NovikovDegree &d);

// Requires the span hypothesis: the polarization lies in the linear span of
// {mu_j : mu_j(d) >= 0}. When the cone reading of that hypothesis disagrees
// with the span reading, the result carries a warning flag.
KirwanLeadingTerm kirwan_leading(const GitData &g, const PresentationPtr &pres,
                                 const NovikovDegree &d);

}  // namespace qk
