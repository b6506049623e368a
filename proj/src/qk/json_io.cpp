#include "qk/json_io.hpp"

#include "qk/error.hpp"

namespace qk {

namespace {

void require_keys(const Json &j, const std::vector<std::string> &required,
                  const std::vector<std::string> &optional,
                  const std::string &what) {
  if (!j.is_object()) throw_invalid(what + " must be a JSON object");
  for (const auto &key : required) {
    if (!j.contains(key)) throw_invalid(what + " is missing key '" + key + "'");
  }
  for (const auto &item : j.items()) {
    bool known = false;
    for (const auto &key : required) known |= (item.key() == key);
    for (const auto &key : optional) known |= (item.key() == key);
    if (!known) throw_invalid(what + " has unknown key '" + item.key() + "'");
  }
}

long long_from_json(const Json &j, const std::string &what) {
  if (!j.is_number_integer()) throw_invalid(what + " must be an integer");
  return j.get<long>();
}

}  // namespace

Json rational_to_json(const Rational &value) {
  return rational_to_string(value);
}

Rational rational_from_json(const Json &j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw_invalid("expected a rational as \"p/q\" or integer");
}

Json rational_vector_to_json(const RationalVector &v) {
  Json out = Json::array();
  for (const auto &x : v) out.push_back(rational_to_json(x));
  return out;
}

RationalVector rational_vector_from_json(const Json &j) {
  if (!j.is_array()) throw_invalid("expected an array of rationals");
  RationalVector v;
  for (const auto &x : j) v.push_back(rational_from_json(x));
  return v;
}

Json poly_to_json(const Poly &p) {
  Json out = Json::array();
  for (const auto &[m, c] : p.terms()) {
    Json term = Json::object();
    term["exponents"] = m;
    term["coeff"] = rational_to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

Poly poly_from_json(const Json &j, int nvars) {
  if (!j.is_array()) throw_invalid("polynomial must be an array of terms");
  Poly p(nvars);
  for (const auto &term : j) {
    require_keys(term, {"exponents", "coeff"}, {}, "polynomial term");
    Monomial m;
    for (const auto &e : term["exponents"]) {
      m.push_back(static_cast<int>(long_from_json(e, "exponent")));
    }
    if (static_cast<int>(m.size()) != nvars) {
      throw_invalid("polynomial term has wrong exponent count");
    }
    p.add_term(m, rational_from_json(term["coeff"]));
  }
  return p;
}

NovikovDegree degree_from_json(const Json &j, const GitData &g) {
  if (!j.is_object() || !j.contains("degree")) {
    throw_invalid("degree object must carry a 'degree' vector");
  }
  NovikovDegree d = make_degree(g, rational_vector_from_json(j["degree"]));
  if (j.contains("energy") && rational_from_json(j["energy"]) != d.energy) {
    throw_invalid("degree energy does not match the polarization pairing");
  }
  return d;
}

Json zeta_to_json(const ZetaElement &z) {
  Json out = Json::array();
  for (const auto &[e, p] : z.terms()) {
    Json term = Json::object();
    term["zeta_exp"] = e;
    term["value"] = poly_to_json(p);
    out.push_back(std::move(term));
  }
  return out;
}

ZetaElement zeta_from_json(const Json &j, const PresentationPtr &pres) {
  if (!j.is_array()) throw_invalid("zeta element must be an array of terms");
  ZetaElement z(pres);
  for (const auto &term : j) {
    require_keys(term, {"zeta_exp", "value"}, {}, "zeta term");
    int e = static_cast<int>(long_from_json(term["zeta_exp"], "zeta_exp"));
    z.add_term(e, poly_from_json(term["value"], pres->nvars()));
  }
  return z;
}

Json iseries_to_json(const ISeries &s) {
  Json out = Json::array();
  for (const auto &[degree, coeff] : s.series.terms()) {
    Json term = Json::object();
    term["degree"] = rational_vector_to_json(degree.d);
    term["energy"] = rational_to_json(degree.energy);
    term["coeff"] = zeta_to_json(coeff);
    out.push_back(std::move(term));
  }
  return out;
}

ISeries iseries_from_json(const Json &j, const PresentationPtr &pres,
                          const Rational &cutoff) {
  if (!j.is_array()) throw_invalid("series must be an array of terms");
  ISeries s{pres, NovikovSeries<ZetaElement>(pres->git().r(), cutoff)};
  for (const auto &term : j) {
    require_keys(term, {"degree", "coeff"}, {"energy"}, "series term");
    NovikovDegree d = degree_from_json(term, pres->git());
    s.series.add_term(d, zeta_from_json(term["coeff"], pres));
  }
  return s;
}

Json sector_to_json(const Sector &s) {
  Json out = Json::object();
  out["xi"] = rational_vector_to_json(s.xi);
  out["order"] = s.order;
  out["age"] = rational_to_json(s.age);
  out["fixed_support"] = s.fixed_support.indices;
  return out;
}

Sector sector_from_json(const Json &j, const GitData &g) {
  require_keys(j, {"xi", "order", "age", "fixed_support"}, {}, "sector");
  Sector s;
  s.xi = rational_vector_from_json(j["xi"]);
  s.order = long_from_json(j["order"], "order");
  s.age = rational_from_json(j["age"]);
  for (const auto &i : j["fixed_support"]) {
    s.fixed_support.indices.push_back(
        static_cast<int>(long_from_json(i, "support index")));
  }
  s.fixed_support.semistable =
      support_is_semistable(g, s.fixed_support.indices);
  return s;
}

Json qsr_to_json(const QsrGenerator &gen) {
  Json out = Json::object();
  out["degree"] = rational_vector_to_json(gen.d.d);
  out["energy"] = rational_to_json(gen.d.energy);
  out["classical_part"] = poly_to_json(gen.classical_part);
  out["quantum_part"] = poly_to_json(gen.quantum_part);
  return out;
}

QsrGenerator qsr_from_json(const Json &j, const GitData &g) {
  require_keys(j, {"degree", "classical_part", "quantum_part"}, {"energy"},
               "generator");
  QsrGenerator gen;
  gen.d = degree_from_json(j, g);
  gen.classical_part =
      poly_from_json(j["classical_part"], static_cast<int>(g.r()));
  gen.quantum_part =
      poly_from_json(j["quantum_part"], static_cast<int>(g.r()));
  return gen;
}

Json equivariant_qsr_to_json(const EquivariantQsrGenerator &gen) {
  Json out = Json::object();
  out["degree"] = rational_vector_to_json(gen.d.d);
  out["energy"] = rational_to_json(gen.d.energy);
  out["classical_part"] = poly_to_json(gen.classical_part);
  out["quantum_part"] = poly_to_json(gen.quantum_part);
  return out;
}

Json kirwan_to_json(const KirwanLeadingTerm &term) {
  Json out = Json::object();
  out["degree"] = rational_vector_to_json(term.d.d);
  out["energy"] = rational_to_json(term.d.energy);
  out["input_monomial"] = poly_to_json(term.input_monomial);
  Json output = Json::object();
  output["q_degree"] = rational_vector_to_json(term.d.d);
  output["ring_part"] = poly_to_json(term.output.value);
  out["output"] = std::move(output);
  out["modulo_note"] = term.modulo_note;
  out["interpretation"] = term.interpretation;
  out["span_cone_warning"] = term.span_cone_disagree;
  return out;
}

Json presentation_to_json(const RingPresentation &pres) {
  Json out = Json::object();
  out["variables"] = default_var_names(pres.nvars());
  Json gens = Json::array();
  for (const auto &gen : pres.sr_generators()) {
    Json g = Json::object();
    g["unstable_set"] = gen.unstable_set;
    g["degree"] = rational_vector_to_json(gen.degree);
    g["exponents"] = gen.exponents;
    g["generator"] = poly_to_json(gen.generator);
    gens.push_back(std::move(g));
  }
  out["sr_generators"] = std::move(gens);
  Json basis = Json::array();
  for (const auto &b : pres.groebner_basis()) basis.push_back(poly_to_json(b));
  out["groebner_basis"] = std::move(basis);
  if (pres.finite_dimensional()) {
    out["dimension"] = pres.dimension();
  } else {
    out["dimension"] = nullptr;
  }
  out["warnings"] = pres.warnings();
  return out;
}

Json git_data_to_json(const GitData &g) {
  Json out = Json::object();
  Json weights = Json::array();
  for (std::size_t a = 0; a < g.r(); ++a) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.k(); ++j) {
      row.push_back(g.weights().at(a, j).get_str());
    }
    weights.push_back(std::move(row));
  }
  out["weights"] = std::move(weights);
  out["polarization"] = rational_vector_to_json(g.polarization());
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

GitData parse_git_data(const Json &document) {
  require_keys(document, {"weights", "polarization"}, {"labels"}, "GIT datum");
  const Json &w = document["weights"];
  if (!w.is_array() || w.empty()) {
    throw_invalid("weights must be a nonempty matrix");
  }
  std::size_t rows = w.size();
  if (!w[0].is_array() || w[0].empty()) {
    throw_invalid("weights must be a nonempty matrix");
  }
  std::size_t cols = w[0].size();
  IntMatrix weights(rows, cols);
  for (std::size_t a = 0; a < rows; ++a) {
    if (!w[a].is_array() || w[a].size() != cols) {
      throw_invalid("weight rows must have equal length");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Json &entry = w[a][j];
      if (entry.is_number_integer()) {
        weights.at(a, j) = Integer(entry.get<long>());
      } else if (entry.is_string()) {
        Rational value = rational_from_string(entry.get<std::string>());
        if (!is_integer(value)) throw_invalid("weights must be integers");
        weights.at(a, j) = value.get_num();
      } else {
        throw_invalid("weights must be integers");
      }
    }
  }
  RationalVector nu = rational_vector_from_json(document["polarization"]);
  std::vector<std::string> labels;
  if (document.contains("labels")) {
    for (const auto &label : document["labels"]) {
      if (!label.is_string()) throw_invalid("labels must be strings");
      labels.push_back(label.get<std::string>());
    }
  }
  return GitData::make(weights, nu, std::move(labels));
}

}  // namespace qk
