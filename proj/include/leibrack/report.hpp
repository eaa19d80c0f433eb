#pragma once

#include "leibrack/properties.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace leibrack {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  exit_pass = 0,
  exit_validation = 2,
  exit_coverage = 3,
  exit_property = 4,
};

struct CommandResult {
  int exit_code = exit_pass;
  Json report;
};

CommandResult cmd_verify(const std::string &path);
CommandResult cmd_analyze(const std::string &path);
CommandResult cmd_integrate(const std::string &path, const SuiteConfig &cfg);
/// `name` is one of builtin_names(); throws std::invalid_argument otherwise.
CommandResult cmd_example(const std::string &name, const SuiteConfig &cfg);

/// Indented plain-text rendering of a report.
std::string render_text(const Json &report);

} // namespace leibrack
