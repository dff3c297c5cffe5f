#include "trigas/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "csv_util.hpp"

namespace trigas {

KeyValueConfig KeyValueConfig::parse(std::istream& in) {
  KeyValueConfig config;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = line;
    if (auto hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
    sv = csv::trim(sv);
    if (sv.empty()) continue;
    const auto eq = sv.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(csv::trim(sv.substr(0, eq)));
    const std::string value(csv::trim(sv.substr(eq + 1)));
    if (key.empty())
      throw ParseError("config line " + std::to_string(line_no) + ": empty key");
    config.values_[key] = value;
  }
  return config;
}

KeyValueConfig KeyValueConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse(in);
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  double out = 0.0;
  const char* first = v->data();
  const char* last = v->data() + v->size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    throw ConfigError("config key '" + key + "': cannot parse number '" + *v + "'");
  return out;
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw ConfigError("config key '" + key + "': cannot parse boolean '" + *v + "'");
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
  return get(key).value_or(fallback);
}

PhysicalConstants constants_from_config(const KeyValueConfig& config) {
  const PhysicalConstants def = PhysicalConstants::li6();
  return PhysicalConstants::with(config.get_double("constants.hbar_J_s", def.hbar),
                                 config.get_double("constants.kB_J_per_K", def.kB),
                                 config.get_double("constants.m_kg", def.m),
                                 config.get_double("constants.a0_m", def.a0));
}

}  // namespace trigas
