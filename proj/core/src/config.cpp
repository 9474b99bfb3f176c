#include "radgen/config.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string_view>

namespace radgen {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, const std::string& where) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument(where + ": cannot parse '" + std::string(text) + "'");
  return value;
}

bool parse_bool(std::string_view text, const std::string& where) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw std::invalid_argument(where + ": expected a boolean, got '" + std::string(text) + "'");
}

}  // namespace

Config parse_config(std::istream& in, const std::string& origin) {
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument(where + ": expected key = value");
    const auto key = trim(view.substr(0, eq));
    const auto value = trim(view.substr(eq + 1));
    if (key == "sieve_limit") {
      cfg.sieve_limit = parse_number<std::uint64_t>(value, where);
    } else if (key == "prime_limit") {
      cfg.prime_limit = parse_number<std::uint64_t>(value, where);
    } else if (key == "tolerance_multiplier") {
      cfg.tolerance_multiplier = parse_number<double>(value, where);
      if (!(cfg.tolerance_multiplier > 0.0))
        throw std::invalid_argument(where + ": tolerance_multiplier must be positive");
    } else if (key == "cache_radicals") {
      cfg.cache_radicals = parse_bool(value, where);
    } else if (key == "threads") {
      cfg.threads = parse_number<unsigned>(value, where);
      if (cfg.threads == 0) throw std::invalid_argument(where + ": threads must be >= 1");
    } else {
      throw std::invalid_argument(where + ": unknown key '" + std::string(key) + "'");
    }
  }
  return cfg;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  return parse_config(in, path);
}

Config load_default_config() {
  if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0')
    return load_config_file(env);
  if (std::filesystem::exists(kDefaultConfigFile)) return load_config_file(kDefaultConfigFile);
  return {};
}

}  // namespace radgen
