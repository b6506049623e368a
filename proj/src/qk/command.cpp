#include "qk/command.hpp"

#include <sstream>

#include "qk/error.hpp"

namespace qk {

namespace {

Command command_from_string(const std::string &name) {
  if (name == "presentation") return Command::presentation;
  if (name == "inertia") return Command::inertia;
  if (name == "ifunction") return Command::ifunction;
  if (name == "check-qde") return Command::check_qde;
  if (name == "qsr") return Command::qsr;
  if (name == "kirwan") return Command::kirwan;
  if (name == "dm-check") return Command::dm_check;
  throw_invalid("unknown command '" + name + "'");
}

bool command_enumerates(Command c) {
  return c == Command::ifunction || c == Command::check_qde;
}

bool command_needs_degrees(Command c) {
  return c == Command::check_qde || c == Command::qsr || c == Command::kirwan;
}

std::vector<std::pair<long, long>> box_from_json(const Json &j) {
  if (!j.is_array() || j.empty()) {
    throw_invalid("box must be an array of [lo, hi] pairs");
  }
  std::vector<std::pair<long, long>> box;
  for (const auto &pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw_invalid("box must be an array of [lo, hi] pairs");
    }
    box.emplace_back(pair[0].get<long>(), pair[1].get<long>());
  }
  return box;
}

std::string poly_text(const Poly &p, char prefix = 'u') {
  return p.to_string(default_var_names(p.nvars(), prefix));
}

std::string degree_text(const NovikovDegree &d) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < d.d.size(); ++i) {
    if (i) out << ",";
    out << rational_to_string(d.d[i]);
  }
  out << ")";
  return out.str();
}

std::string qsr_text(const QsrGenerator &gen) {
  std::ostringstream out;
  out << poly_text(gen.classical_part) << " - q^" << degree_text(gen.d);
  if (!gen.quantum_part.is_constant() ||
      gen.quantum_part.terms().begin()->second != 1) {
    out << " * (" << poly_text(gen.quantum_part) << ")";
  }
  return out.str();
}

std::string zeta_text(const ZetaElement &z) {
  if (z.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[e, p] : z.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << poly_text(p) << ")";
    if (e != 0) out << "*zeta^" << e;
  }
  return out.str();
}

void render_warnings(std::ostringstream &out,
                     const std::vector<std::string> &warnings) {
  for (const auto &w : warnings) out << "warning: " << w << "\n";
}

Json warnings_json(const std::vector<std::string> &warnings) {
  Json out = Json::array();
  for (const auto &w : warnings) out.push_back(w);
  return out;
}

CommandResult finish(const CommandRequest &request, Json output,
                     std::string text) {
  CommandResult result;
  result.status = 0;
  result.output = std::move(output);
  result.rendered = request.text_format ? std::move(text)
                                        : result.output.dump(2) + "\n";
  return result;
}

CommandResult run_presentation(const CommandRequest &request) {
  PresentationPtr pres = build_presentation(request.git);
  Json output = presentation_to_json(*pres);

  std::ostringstream text;
  render_warnings(text, pres->warnings());
  text << "ring: Q[";
  auto names = default_var_names(pres->nvars());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) text << ",";
    text << names[i];
  }
  text << "]\n";
  for (const auto &gen : pres->sr_generators()) {
    text << "generator";
    text << " (unstable set {";
    for (std::size_t i = 0; i < gen.unstable_set.size(); ++i) {
      if (i) text << ",";
      text << gen.unstable_set[i];
    }
    text << "}): " << poly_text(gen.generator) << "\n";
  }
  text << "groebner basis:";
  for (const auto &b : pres->groebner_basis()) text << " " << poly_text(b) << ";";
  text << "\n";
  if (pres->finite_dimensional()) {
    text << "dimension: " << pres->dimension() << "\n";
  } else {
    text << "dimension: infinite\n";
  }
  return finish(request, std::move(output), text.str());
}

CommandResult run_dm_check(const CommandRequest &request) {
  bool dm = is_dm(request.git);
  auto supports = minimal_semistable_supports(request.git);
  std::vector<std::string> warnings;
  if (request.git.strictly_semistable()) {
    warnings.push_back(
        "polarization lies on a wall: strictly semistable points may exist");
  }
  Json output = Json::object();
  output["dm"] = dm;
  Json sup = Json::array();
  for (const auto &s : supports) sup.push_back(s);
  output["minimal_semistable_supports"] = std::move(sup);
  output["warnings"] = warnings_json(warnings);

  std::ostringstream text;
  render_warnings(text, warnings);
  text << "deligne-mumford: " << (dm ? "yes" : "no") << "\n";
  text << "minimal semistable supports:";
  for (const auto &s : supports) {
    text << " {";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) text << ",";
      text << s[i];
    }
    text << "}";
  }
  text << "\n";
  return finish(request, std::move(output), text.str());
}

CommandResult run_inertia(const CommandRequest &request) {
  auto sectors = enumerate_sectors(request.git);
  Json output = Json::array();
  std::ostringstream text;
  for (const auto &sector : sectors) {
    Json entry = sector_to_json(sector);
    PresentationPtr ring = sector_ring(request.git, sector);
    Json ring_json = Json::object();
    Json basis = Json::array();
    for (const auto &b : ring->groebner_basis()) {
      basis.push_back(poly_to_json(b));
    }
    ring_json["groebner_basis"] = std::move(basis);
    if (ring->finite_dimensional()) {
      ring_json["dimension"] = ring->dimension();
    } else {
      ring_json["dimension"] = nullptr;
    }
    entry["ring"] = std::move(ring_json);
    output.push_back(std::move(entry));

    text << "sector xi=" << degree_text({sector.xi, Rational(0)})
         << " order=" << sector.order
         << " age=" << rational_to_string(sector.age) << " fixed={";
    for (std::size_t i = 0; i < sector.fixed_support.indices.size(); ++i) {
      if (i) text << ",";
      text << sector.fixed_support.indices[i];
    }
    text << "}\n";
  }
  return finish(request, std::move(output), text.str());
}

CommandResult run_ifunction(const CommandRequest &request) {
  PresentationPtr pres = build_presentation(request.git);
  DegreeEnumeration enumeration = enumerate_degrees(
      request.git, request.e_max, request.box, request.denominator);
  std::vector<std::string> warnings;
  if (enumeration.empty_warning) warnings.push_back("empty enumeration box");
  if (enumeration.boundary_touched) {
    warnings.push_back("enumeration box boundary reached; series may be "
                       "truncated in degree");
  }
  ISeries series =
      i_series(pres, request.e_max, request.box, request.denominator);
  Json output = Json::object();
  output["cutoff"] = rational_to_json(request.e_max);
  output["series"] = iseries_to_json(series);
  output["warnings"] = warnings_json(warnings);

  std::ostringstream text;
  render_warnings(text, warnings);
  for (const auto &[degree, coeff] : series.series.terms()) {
    text << "q^" << degree_text(degree) << ": " << zeta_text(coeff) << "\n";
  }
  return finish(request, std::move(output), text.str());
}

CommandResult run_check_qde(const CommandRequest &request) {
  PresentationPtr pres = build_presentation(request.git);
  ISeries series =
      i_series(pres, request.e_max, request.box, request.denominator);
  Json output = Json::array();
  std::ostringstream text;
  for (const auto &d : request.degrees) {
    BoxOperator op = make_box_operator(request.git, d);
    AnnihilationReport report = check_annihilation(op, series);
    Json entry = Json::object();
    entry["degree"] = rational_vector_to_json(d.d);
    entry["ok"] = report.ok;
    entry["verified_energy"] = rational_to_json(report.verified_energy);
    entry["validity_floor"] = rational_to_json(report.validity_floor);
    entry["residual"] = iseries_to_json(report.residual);
    output.push_back(std::move(entry));

    text << "degree " << degree_text(d) << ": "
         << (report.ok ? "annihilated" : "NOT annihilated")
         << " up to energy " << rational_to_string(report.verified_energy)
         << " (from " << rational_to_string(report.validity_floor) << ")\n";
  }
  return finish(request, std::move(output), text.str());
}

CommandResult run_qsr(const CommandRequest &request) {
  Json output = Json::array();
  std::ostringstream text;
  for (const auto &d : request.degrees) {
    QsrGenerator gen = qsr_generator(request.git, d);
    EquivariantQsrGenerator eq = equivariant_qsr_generator(request.git, d);
    Json entry = qsr_to_json(gen);
    entry["equivariant"] = equivariant_qsr_to_json(eq);
    output.push_back(std::move(entry));

    text << "degree " << degree_text(d) << ": " << qsr_text(gen) << "\n";
    text << "  equivariant: " << poly_text(eq.classical_part, 'v') << " - q^"
         << degree_text(d);
    if (!eq.quantum_part.is_constant() ||
        eq.quantum_part.terms().begin()->second != 1) {
      text << " * (" << poly_text(eq.quantum_part, 'v') << ")";
    }
    text << "\n";
  }
  return finish(request, std::move(output), text.str());
}

CommandResult run_kirwan(const CommandRequest &request) {
  PresentationPtr pres = build_presentation(request.git);
  Json output = Json::array();
  std::ostringstream text;
  for (const auto &d : request.degrees) {
    KirwanLeadingTerm term = kirwan_leading(request.git, pres, d);
    output.push_back(kirwan_to_json(term));
    text << poly_text(term.input_monomial) << " -> q^" << degree_text(term.d)
         << " * (" << poly_text(term.output.value) << ")  ["
         << term.modulo_note << "; " << term.interpretation << "]";
    if (term.span_cone_disagree) {
      text << "  [warning: span hypothesis holds but cone reading fails]";
    }
    text << "\n";
  }
  return finish(request, std::move(output), text.str());
}

}  // namespace

CommandRequest parse_request(const Json &request) {
  if (!request.is_object()) throw_invalid("request must be a JSON object");
  for (const auto &item : request.items()) {
    if (item.key() != "command" && item.key() != "input" &&
        item.key() != "options") {
      throw_invalid("request has unknown key '" + item.key() + "'");
    }
  }
  if (!request.contains("command") || !request["command"].is_string()) {
    throw_invalid("request must name a command");
  }
  if (!request.contains("input")) throw_invalid("request must carry an input");

  CommandRequest parsed{.command = command_from_string(request["command"]),
                        .git = parse_git_data(request["input"]),
                        .e_max = Rational(0),
                        .box = {},
                        .denominator = 1,
                        .degrees = {},
                        .text_format = false};

  Json options = request.contains("options") ? request["options"]
                                             : Json::object();
  if (!options.is_object()) throw_invalid("options must be a JSON object");
  for (const auto &item : options.items()) {
    const std::string &key = item.key();
    if (key == "emax") {
      parsed.e_max = rational_from_json(item.value());
    } else if (key == "box") {
      parsed.box = box_from_json(item.value());
    } else if (key == "denominator") {
      if (!item.value().is_number_integer()) {
        throw_invalid("denominator must be an integer");
      }
      parsed.denominator = item.value().get<long>();
    } else if (key == "degrees") {
      if (!item.value().is_array()) {
        throw_invalid("degrees must be an array of degree vectors");
      }
      for (const auto &vec : item.value()) {
        parsed.degrees.push_back(
            make_degree(parsed.git, rational_vector_from_json(vec)));
      }
    } else if (key == "format") {
      if (!item.value().is_string() ||
          (item.value() != "json" && item.value() != "text")) {
        throw_invalid("format must be \"json\" or \"text\"");
      }
      parsed.text_format = (item.value() == "text");
    } else {
      throw_invalid("options has unknown key '" + key + "'");
    }
  }

  if (command_enumerates(parsed.command)) {
    if (!options.contains("emax") || !options.contains("box") ||
        !options.contains("denominator")) {
      throw_invalid(
          "emax, box and denominator are mandatory for commands that "
          "enumerate degrees");
    }
  } else if (options.contains("emax") || options.contains("box") ||
             options.contains("denominator")) {
    throw_invalid("emax/box/denominator apply only to enumerating commands");
  }
  if (command_needs_degrees(parsed.command)) {
    if (parsed.degrees.empty()) {
      throw_invalid("a nonempty degree list is mandatory for this command");
    }
  } else if (!parsed.degrees.empty()) {
    throw_invalid("degrees apply only to check-qde, qsr and kirwan");
  }
  return parsed;
}

CommandResult run(const CommandRequest &request) {
  switch (request.command) {
    case Command::presentation:
      return run_presentation(request);
    case Command::inertia:
      return run_inertia(request);
    case Command::ifunction:
      return run_ifunction(request);
    case Command::check_qde:
      return run_check_qde(request);
    case Command::qsr:
      return run_qsr(request);
    case Command::kirwan:
      return run_kirwan(request);
    case Command::dm_check:
      return run_dm_check(request);
  }
  throw_invalid("unknown command");
}

CommandResult run_request_json(const std::string &request_text) {
  try {
    Json request = Json::parse(request_text);
    return run(parse_request(request));
  } catch (const Error &e) {
    CommandResult result;
    result.status = e.kind() == ErrorKind::invalid_input ? 1 : 2;
    Json error = Json::object();
    error["kind"] = result.status == 1 ? "invalid_input" : "precondition_failed";
    error["message"] = e.what();
    result.output = Json::object();
    result.output["error"] = std::move(error);
    result.rendered = result.output.dump(2) + "\n";
    return result;
  } catch (const Json::parse_error &e) {
    CommandResult result;
    result.status = 1;
    Json error = Json::object();
    error["kind"] = "invalid_input";
    error["message"] = std::string("malformed JSON: ") + e.what();
    result.output = Json::object();
    result.output["error"] = std::move(error);
    result.rendered = result.output.dump(2) + "\n";
    return result;
  }
}

}  // namespace qk
