#pragma once

// Session configuration for the command-line front end: defaults, then a
// config file, then QHYPER_* environment variables, then flags.

#include <functional>
#include <optional>
#include <string>

#include "qhyper/pbw.hpp"
#include "qhyper/scalar.hpp"

namespace qhyper {

struct SessionConfig {
  long p = 5;
  std::string u = "6";
  long eE = 2;
  long eF = 2;
  long eK = 0;
  long precision_floor_exp = -40;
  std::string output = "text";

  QParams params() const;
  RadiusSpec radii() const { return {eE, eF, eK}; }
  /// Throws ConfigError if the parameters or the output mode are invalid.
  void validate() const;
  /// Hopf operations need R_K = 1.
  void require_hopf() const;
};

/// Sets one field by its name (p, u, eE, eF, eK, precision_floor_exp,
/// output); throws ConfigError on unknown keys or malformed values.
void set_config_field(SessionConfig& cfg, const std::string& key, const std::string& value);

/// key=value lines (# comments allowed) or a JSON object.
void load_config_text(SessionConfig& cfg, const std::string& text);
void load_config_file(SessionConfig& cfg, const std::string& path);

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
/// QHYPER_P, QHYPER_U, QHYPER_EE, QHYPER_EF, QHYPER_EK,
/// QHYPER_PRECISION_FLOOR_EXP, QHYPER_OUTPUT.
void apply_env(SessionConfig& cfg, const EnvLookup& lookup);
EnvLookup process_env();

}  // namespace qhyper
