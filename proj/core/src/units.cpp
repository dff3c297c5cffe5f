#include "trigas/units.hpp"

#include <array>
#include <string>

namespace trigas {

namespace {

// Bohr radius in meters; must stay in sync with PhysicalConstants::li6().
constexpr double kBohr = 5.29177210903e-11;

constexpr std::array kUnits = {
    Unit{"m", Dimension::Length, 1.0},
    Unit{"cm", Dimension::Length, 1e-2},
    Unit{"a0", Dimension::Length, kBohr},
    Unit{"s", Dimension::Time, 1.0},
    Unit{"ms", Dimension::Time, 1e-3},
    Unit{"us", Dimension::Time, 1e-6},
    Unit{"ns", Dimension::Time, 1e-9},
    Unit{"J", Dimension::Energy, 1.0},
    Unit{"K", Dimension::Temperature, 1.0},
    Unit{"mK", Dimension::Temperature, 1e-3},
    Unit{"uK", Dimension::Temperature, 1e-6},
    Unit{"nK", Dimension::Temperature, 1e-9},
    Unit{"Hz", Dimension::Frequency, 1.0},
    Unit{"kHz", Dimension::Frequency, 1e3},
    Unit{"MHz", Dimension::Frequency, 1e6},
    Unit{"T", Dimension::MagneticField, 1.0},
    Unit{"G", Dimension::MagneticField, 1e-4},
    Unit{"mG", Dimension::MagneticField, 1e-7},
    Unit{"m6/s", Dimension::RateConstantL3, 1.0},
    Unit{"cm6/s", Dimension::RateConstantL3, 1e-12},
    Unit{"1/m", Dimension::InverseLength, 1.0},
    Unit{"1/a0", Dimension::InverseLength, 1.0 / kBohr},
};

}  // namespace

std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::Length: return "length";
    case Dimension::Time: return "time";
    case Dimension::Energy: return "energy";
    case Dimension::Temperature: return "temperature";
    case Dimension::Frequency: return "frequency";
    case Dimension::MagneticField: return "magnetic-field";
    case Dimension::RateConstantL3: return "rate-constant-L3";
    case Dimension::InverseLength: return "inverse-length";
  }
  return "?";
}

const Unit& find_unit(std::string_view name) {
  for (const Unit& u : kUnits)
    if (name == u.name) return u;
  throw UnitError("unknown unit '" + std::string(name) + "'");
}

Quantity convert(const Quantity& q, std::string_view target_unit) {
  const Unit& target = find_unit(target_unit);
  if (target.dim != q.unit->dim)
    throw UnitError("cannot convert " + std::string(dimension_name(q.unit->dim)) + " '" +
                    q.unit->name + "' to " + std::string(dimension_name(target.dim)) + " '" +
                    target.name + "'");
  return Quantity(q.value * (q.unit->to_si / target.to_si), target);
}

namespace {

void require_same_dimension(const Quantity& a, const Quantity& b, const char* op) {
  if (a.unit->dim != b.unit->dim)
    throw UnitError(std::string(op) + ": dimension mismatch (" +
                    std::string(dimension_name(a.unit->dim)) + " vs " +
                    std::string(dimension_name(b.unit->dim)) + ")");
}

}  // namespace

Quantity operator+(const Quantity& a, const Quantity& b) {
  require_same_dimension(a, b, "operator+");
  return Quantity(a.value + b.value * (b.unit->to_si / a.unit->to_si), *a.unit);
}

Quantity operator-(const Quantity& a, const Quantity& b) {
  require_same_dimension(a, b, "operator-");
  return Quantity(a.value - b.value * (b.unit->to_si / a.unit->to_si), *a.unit);
}

Quantity operator*(double c, const Quantity& q) { return Quantity(c * q.value, *q.unit); }
Quantity operator*(const Quantity& q, double c) { return c * q; }
Quantity operator/(const Quantity& q, double c) { return Quantity(q.value / c, *q.unit); }

double ratio(const Quantity& a, const Quantity& b) {
  require_same_dimension(a, b, "ratio");
  return a.si() / b.si();
}

}  // namespace trigas
