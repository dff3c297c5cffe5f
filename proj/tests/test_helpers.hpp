#pragma once

#include <cmath>
#include <string>

inline double rel_err(double actual, double expected) {
  return std::abs(actual - expected) / std::abs(expected);
}

inline std::string data_path(const std::string& name) {
  return std::string(TRIGAS_DATA_DIR) + "/" + name;
}
