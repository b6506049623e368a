#pragma once

#include <json.hpp>

#include "qk/ifunction.hpp"
#include "qk/inertia.hpp"
#include "qk/qde.hpp"
#include "qk/qkirwan.hpp"

namespace qk {

// All emitted documents use insertion-ordered JSON with canonical term
// orders, so equal values serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational &value);
Rational rational_from_json(const Json &j);

Json rational_vector_to_json(const RationalVector &v);
RationalVector rational_vector_from_json(const Json &j);

Json poly_to_json(const Poly &p);
Poly poly_from_json(const Json &j, int nvars);

NovikovDegree degree_from_json(const Json &j, const GitData &g);

Json zeta_to_json(const ZetaElement &z);
ZetaElement zeta_from_json(const Json &j, const PresentationPtr &pres);

Json iseries_to_json(const ISeries &s);
ISeries iseries_from_json(const Json &j, const PresentationPtr &pres,
                          const Rational &cutoff);

Json sector_to_json(const Sector &s);
Sector sector_from_json(const Json &j, const GitData &g);

Json qsr_to_json(const QsrGenerator &gen);
QsrGenerator qsr_from_json(const Json &j, const GitData &g);

Json equivariant_qsr_to_json(const EquivariantQsrGenerator &gen);

Json kirwan_to_json(const KirwanLeadingTerm &term);

Json presentation_to_json(const RingPresentation &pres);

Json git_data_to_json(const GitData &g);

// Parses the input schema {"weights": [[int]], "polarization": ["p/q"],
// "labels": [string]?}; unknown keys are rejected.
GitData parse_git_data(const Json &document);

}  // namespace qk
