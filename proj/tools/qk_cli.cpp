// Batch front end for the toric quantum-cohomology library. Each subcommand
// reads a GIT datum from --input, builds a request document and hands it to
// the shared library through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qk/qk.h"

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string input_path;
  std::string emax;
  std::string box;
  long denominator = 0;
  std::string degrees;
  std::string format = "json";
  bool has_emax = false;
  bool has_denominator = false;
};

// "lo:hi,lo:hi" -> [[lo,hi],...]
Json parse_box(const std::string &text) {
  Json box = Json::array();
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("--box expects lo:hi[,lo:hi...]");
    }
    long lo = 0, hi = 0;
    try {
      std::size_t used_lo = 0, used_hi = 0;
      lo = std::stol(part.substr(0, colon), &used_lo);
      hi = std::stol(part.substr(colon + 1), &used_hi);
      if (used_lo != colon || used_hi != part.size() - colon - 1) {
        throw std::invalid_argument(part);
      }
    } catch (const std::exception &) {
      throw std::runtime_error("--box expects integer bounds, got '" + part +
                               "'");
    }
    box.push_back(Json::array({lo, hi}));
  }
  if (box.empty()) throw std::runtime_error("--box expects at least one pair");
  return box;
}

int run_command_impl(const std::string &command, const CommonOptions &options);

int run_command(const std::string &command, const CommonOptions &options) {
  try {
    return run_command_impl(command, options);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_command_impl(const std::string &command, const CommonOptions &options) {
  std::ifstream file(options.input_path);
  if (!file) {
    std::cerr << "error: cannot read input file '" << options.input_path
              << "'\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  Json input = Json::parse(buffer.str(), nullptr, false);
  if (input.is_discarded()) {
    std::cerr << "error: input file is not valid JSON\n";
    return 1;
  }

  Json request = Json::object();
  request["command"] = command;
  request["input"] = std::move(input);
  Json opts = Json::object();
  if (options.has_emax) opts["emax"] = options.emax;
  if (!options.box.empty()) opts["box"] = parse_box(options.box);
  if (options.has_denominator) opts["denominator"] = options.denominator;
  if (!options.degrees.empty()) {
    Json degrees = Json::parse(options.degrees, nullptr, false);
    if (degrees.is_discarded() || !degrees.is_array()) {
      std::cerr << "error: --degrees must be a JSON array of degree vectors\n";
      return 1;
    }
    opts["degrees"] = std::move(degrees);
  }
  opts["format"] = options.format;
  request["options"] = std::move(opts);

  qk_context *ctx = qk_context_create();
  char *rendered = qk_run_request(ctx, request.dump().c_str());
  int status = qk_last_status(ctx);
  if (rendered) {
    std::fputs(rendered, status == QK_STATUS_OK ? stdout : stderr);
    qk_string_free(rendered);
  } else {
    std::cerr << "error: " << qk_last_error(ctx) << "\n";
  }
  qk_context_destroy(ctx);
  return status;
}

void add_common(CLI::App *cmd, CommonOptions &options, bool enumerating,
                bool degrees) {
  cmd->add_option("--input", options.input_path, "GIT datum JSON file")
      ->required();
  if (enumerating) {
    cmd->add_option("--emax", options.emax, "energy cutoff, rational p/q")
        ->required();
    cmd->add_option("--box", options.box,
                    "per-coordinate numerator bounds lo:hi[,lo:hi...]")
        ->required();
    cmd->add_option("--denominator", options.denominator,
                    "global degree denominator")
        ->required();
  }
  if (degrees) {
    cmd->add_option("--degrees", options.degrees,
                    "JSON array of degree vectors, e.g. [[1,0],[0,1]]")
        ->required();
  }
  cmd->add_option("--format", options.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact toric GIT quantum-cohomology calculator"};
  app.require_subcommand(1);

  struct Spec {
    const char *name;
    const char *help;
    bool enumerating;
    bool degrees;
  };
  const Spec specs[] = {
      {"presentation", "Classical cohomology presentation of the quotient",
       false, false},
      {"inertia", "Inertia sectors, ages and sector rings", false, false},
      {"ifunction", "Energy-truncated I-function", true, false},
      {"check-qde", "Verify difference-operator annihilation of the I-function",
       true, true},
      {"qsr", "Quantum Stanley-Reisner generators", false, true},
      {"kirwan", "Leading-order quantum Kirwan images", false, true},
      {"dm-check", "Deligne-Mumford / stabilizer check", false, false},
  };

  CommonOptions options[std::size(specs)];
  for (std::size_t i = 0; i < std::size(specs); ++i) {
    CLI::App *cmd = app.add_subcommand(specs[i].name, specs[i].help);
    add_common(cmd, options[i], specs[i].enumerating, specs[i].degrees);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors map to the invalid-input code
  }

  for (std::size_t i = 0; i < std::size(specs); ++i) {
    CLI::App *cmd = app.get_subcommand(specs[i].name);
    if (cmd->parsed()) {
      if (specs[i].enumerating) {
        options[i].has_emax = cmd->count("--emax") > 0;
        options[i].has_denominator = cmd->count("--denominator") > 0;
      }
      return run_command(specs[i].name, options[i]);
    }
  }
  return 1;
}
