#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace radgen {

// Environment variable naming an alternate config file.
inline constexpr const char* kConfigEnvVar = "RADGEN_CONFIG";
inline constexpr const char* kDefaultConfigFile = "radgen.conf";

// Defaults for the CLI. Command-line flags override every field.
struct Config {
  std::uint64_t sieve_limit = 1'000'000;
  std::uint64_t prime_limit = 1'000'000;
  // Multiplies every computed tolerance before a pass/fail comparison.
  double tolerance_multiplier = 1.0;
  bool cache_radicals = true;
  unsigned threads = 1;
};

// key = value lines; '#' starts a comment; unknown keys and malformed values
// throw std::invalid_argument naming the line.
Config parse_config(std::istream& in, const std::string& origin = "<config>");
Config load_config_file(const std::string& path);

// $RADGEN_CONFIG if set (must exist), else ./radgen.conf if present, else
// defaults.
Config load_default_config();

}  // namespace radgen
