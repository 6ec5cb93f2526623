#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "crepant/lambda_table.hpp"

namespace crepant {

struct Limits {
  int max_arity = 8;
  int truncate = 8;
  int max_index = 10;
};

struct Config {
  LambdaTable lambdas;
  std::optional<int> max_arity, truncate, max_index;  // as written in the file
};

// Carries the 1-based line of the offending input (0 when unknown).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg);
  int line() const { return line_; }
  std::string message() const { return msg_; }

 private:
  int line_;
  std::string msg_;
};

enum class ConfigFormat { Auto, Json, Toml };

// Auto picks TOML for a ".toml" name, otherwise sniffs the first non-blank character.
Config parse_config(const std::string& text, ConfigFormat format = ConfigFormat::Auto,
                    const std::string& name = "");
Config load_config(const std::string& path);

// CREPANT_MAX_ARITY, CREPANT_TRUNCATE, CREPANT_MAX_INDEX replace the built-in defaults.
Limits default_limits_from_env();
// Defaults, then environment, then values from the file.
Limits effective_limits(const Config& cfg);

}  // namespace crepant
