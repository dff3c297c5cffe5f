#include "trigas/trap.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace trigas {

TrapConfig TrapConfig::trap_a() {
  return TrapConfig(TrapKind::A, TrapFrequencies{0, 0, 0}, {2.0 / 15.0, 0.01, 1.0 / 12.0});
}

TrapConfig TrapConfig::trap_b() {
  return TrapConfig(TrapKind::B, TrapFrequencies{0, 0, 0}, {0.03, 0.03, 2.0 / 94.0});
}

TrapConfig TrapConfig::custom(TrapFrequencies nu, std::array<double, 3> frac_unc) {
  if (!(nu.nu_x > 0.0) || !(nu.nu_y > 0.0) || !(nu.nu_z > 0.0))
    throw DomainError("TrapConfig::custom: frequencies must be positive");
  for (double u : frac_unc)
    if (!(u >= 0.0)) throw DomainError("TrapConfig::custom: uncertainties must be >= 0");
  return TrapConfig(TrapKind::Custom, nu, frac_unc);
}

TrapFrequencies TrapConfig::frequencies(double B_gauss) const {
  switch (kind_) {
    case TrapKind::A:
      if (!(B_gauss > 0.0))
        throw RangeError("trap A: B must be positive, got " + std::to_string(B_gauss) + " G");
      return TrapFrequencies{15.0, 0.242 * std::sqrt(B_gauss), 12.0};
    case TrapKind::B:
      if (!(B_gauss >= 842.0))
        throw RangeError("trap B: frequency formulas require B >= 842 G, got " +
                         std::to_string(B_gauss) + " G");
      return TrapFrequencies{33.0 * std::sqrt(1.0 + 1.4e-3 * (B_gauss - 842.0)),
                             21.0 * std::sqrt(1.0 + 3.6e-3 * (B_gauss - 842.0)), 94.0};
    case TrapKind::Custom:
      return custom_nu_;
  }
  throw DomainError("TrapConfig: unknown kind");
}

double TrapConfig::mean_frequency_fractional_uncertainty() const {
  double sum = 0.0;
  for (double u : frac_unc_) sum += u * u;
  return std::sqrt(sum) / 3.0;
}

double mean_frequency(const TrapFrequencies& nu) {
  if (!(nu.nu_x > 0.0) || !(nu.nu_y > 0.0) || !(nu.nu_z > 0.0))
    throw DomainError("mean_frequency: frequencies must be positive");
  return std::cbrt(nu.nu_x * nu.nu_y * nu.nu_z);
}

double peak_density(const GasState& s, double nubar_hz, const PhysicalConstants& pc) {
  if (!(s.T > 0.0)) throw DomainError("peak_density: temperature must be positive");
  if (!(s.N >= 0.0)) throw DomainError("peak_density: N must be >= 0");
  const double x = 2.0 * std::numbers::pi * pc.m * nubar_hz * nubar_hz / (pc.kB * s.T);
  return s.N * x * std::sqrt(x);
}

double density_squared_average(const GasState& s, double nubar_hz, const PhysicalConstants& pc) {
  const double n0 = peak_density(s, nubar_hz, pc);
  return n0 * n0 / std::sqrt(27.0);
}

double fermi_temperature(double N, double nubar_hz, const PhysicalConstants& pc) {
  if (!(N >= 1.0)) throw DomainError("fermi_temperature: N must be >= 1");
  return pc.h * nubar_hz * std::cbrt(6.0 * N) / pc.kB;
}

}  // namespace trigas
