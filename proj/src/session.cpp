#include "qhyper/session.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qhyper/errors.hpp"

namespace qhyper {

QParams SessionConfig::params() const {
  try {
    return QParams(p, PadicScalar::parse(u));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid deformation parameters: ") + e.what());
  }
}

void SessionConfig::validate() const {
  params();
  if (output != "text" && output != "json") throw ConfigError("output must be text or json");
}

void SessionConfig::require_hopf() const {
  if (eK != 0) throw ConfigError("Hopf operations need R_K = 1 (eK = 0)");
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long x = std::stol(v, &used);
    if (used != v.size()) throw ConfigError("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config value for " + key + " must be an integer, got '" + v + "'");
  }
}

}  // namespace

void set_config_field(SessionConfig& cfg, const std::string& key, const std::string& value) {
  std::string v = trim(value);
  if (key == "p") cfg.p = to_long(key, v);
  else if (key == "u") cfg.u = v;
  else if (key == "eE") cfg.eE = to_long(key, v);
  else if (key == "eF") cfg.eF = to_long(key, v);
  else if (key == "eK") cfg.eK = to_long(key, v);
  else if (key == "precision_floor_exp") cfg.precision_floor_exp = to_long(key, v);
  else if (key == "output") cfg.output = v;
  else throw ConfigError("unknown config key '" + key + "'");
}

void load_config_text(SessionConfig& cfg, const std::string& text) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config JSON: ") + e.what());
    }
    for (const auto& [k, v] : j.items()) set_config_field(cfg, k, v.is_string() ? v.get<std::string>() : v.dump());
    return;
  }
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    set_config_field(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void load_config_file(SessionConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  load_config_text(cfg, ss.str());
}

void apply_env(SessionConfig& cfg, const EnvLookup& lookup) {
  const std::pair<const char*, const char*> vars[] = {
      {"QHYPER_P", "p"},   {"QHYPER_U", "u"},   {"QHYPER_EE", "eE"},
      {"QHYPER_EF", "eF"}, {"QHYPER_EK", "eK"}, {"QHYPER_PRECISION_FLOOR_EXP", "precision_floor_exp"},
      {"QHYPER_OUTPUT", "output"}};
  for (const auto& [env, key] : vars) {
    if (auto v = lookup(env)) set_config_field(cfg, key, *v);
  }
}

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (!v) return std::nullopt;
    return std::string(v);
  };
}

}  // namespace qhyper
