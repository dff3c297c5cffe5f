#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "trigas/constants.hpp"
#include "trigas/errors.hpp"

namespace trigas {

// Flat `key = value` config file. `#` starts a comment, blank lines are
// ignored, later assignments win. Key validation (rejecting unknown keys)
// is the consumer's job, since only it knows its schema.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;

  static KeyValueConfig parse(std::istream& in);
  static KeyValueConfig load_file(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> get(const std::string& key) const;

  // Throw ConfigError when the key is present but not parseable.
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;

  const std::map<std::string, std::string>& entries() const { return values_; }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }

 private:
  std::map<std::string, std::string> values_;
};

// Constants overrides for sensitivity studies, keys (SI units):
//   constants.hbar_J_s, constants.kB_J_per_K, constants.m_kg, constants.a0_m
// h is derived as 2*pi*hbar. Unset keys keep the 6Li defaults.
PhysicalConstants constants_from_config(const KeyValueConfig& config);

}  // namespace trigas
