#pragma once

#include <string_view>

#include "trigas/errors.hpp"

namespace trigas {

// The only dimensions this toolkit needs. Deliberately not a general
// units framework.
enum class Dimension {
  Length,
  Time,
  Energy,
  Temperature,
  Frequency,
  MagneticField,
  RateConstantL3,  // volume^2 / time (L3 rate constant)
  InverseLength,
};

std::string_view dimension_name(Dimension d);

// A named unit: multiplying a value in this unit by `to_si` yields SI.
// The registry is fixed: m cm a0 | s ms us ns | J | K mK uK nK |
// Hz kHz MHz | T G mG | m6/s cm6/s | 1/m 1/a0.
struct Unit {
  const char* name;
  Dimension dim;
  double to_si;
};

// Throws UnitError for names not in the registry.
const Unit& find_unit(std::string_view name);

// A value tagged with its unit. Arithmetic between mismatched dimensions
// throws UnitError; results keep the left operand's unit.
struct Quantity {
  double value;
  const Unit* unit;

  Quantity(double v, std::string_view unit_name) : value(v), unit(&find_unit(unit_name)) {}
  Quantity(double v, const Unit& u) : value(v), unit(&u) {}

  double si() const { return value * unit->to_si; }
  Dimension dimension() const { return unit->dim; }
};

// Exact rescaling; throws UnitError if the target has a different dimension.
Quantity convert(const Quantity& q, std::string_view target_unit);

Quantity operator+(const Quantity& a, const Quantity& b);
Quantity operator-(const Quantity& a, const Quantity& b);
Quantity operator*(double c, const Quantity& q);
Quantity operator*(const Quantity& q, double c);
Quantity operator/(const Quantity& q, double c);

// Dimensionless ratio a/b; dimensions must match.
double ratio(const Quantity& a, const Quantity& b);

}  // namespace trigas
