#pragma once

#include <string>

#include "qk/json_io.hpp"

namespace qk {

enum class Command {
  presentation,
  inertia,
  ifunction,
  check_qde,
  qsr,
  kirwan,
  dm_check,
};

// A validated batch request: the GIT datum plus per-command options.
// Unknown option keys are rejected; commands that enumerate degrees require
// explicit emax / box / denominator (no silent defaults).
struct CommandRequest {
  Command command;
  GitData git;
  Rational e_max;
  std::vector<std::pair<long, long>> box;
  long denominator = 1;
  std::vector<NovikovDegree> degrees;
  bool text_format = false;
};

struct CommandResult {
  int status = 0;  // 0 ok, 1 invalid input, 2 math precondition failure
  Json output;
  std::string rendered;  // JSON or text per the requested format
};

CommandRequest parse_request(const Json &request);

CommandResult run(const CommandRequest &request);

// Parses and runs, mapping thrown errors onto status 1/2 with a
// machine-readable error object.
CommandResult run_request_json(const std::string &request_text);

}  // namespace qk
