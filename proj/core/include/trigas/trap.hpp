#pragma once

#include <array>

#include "trigas/constants.hpp"
#include "trigas/errors.hpp"

namespace trigas {

struct TrapFrequencies {
  double nu_x;  // Hz
  double nu_y;  // Hz
  double nu_z;  // Hz
};

enum class TrapKind { A, B, Custom };

// Harmonic trap with field-dependent frequencies. The two laboratory
// geometries:
//   trap A: nu_x = 15 Hz, nu_y = 0.242*sqrt(B) Hz, nu_z = 12 Hz
//   trap B: nu_x = 33*sqrt(1 + 1.4e-3*(B - 842)) Hz,
//           nu_y = 21*sqrt(1 + 3.6e-3*(B - 842)) Hz, nu_z = 94 Hz
// with B in Gauss. Trap A needs B > 0, trap B needs B >= 842 G. The
// field dependence comes from the bias-coil curvature; the constant axes
// are treated as field-independent. Fractional frequency uncertainties
// per axis are carried along for error propagation.
class TrapConfig {
 public:
  static TrapConfig trap_a();
  static TrapConfig trap_b();
  // Direct frequencies, no field dependence; for synthetic studies.
  static TrapConfig custom(TrapFrequencies nu, std::array<double, 3> frac_unc = {0.0, 0.0, 0.0});

  TrapKind kind() const { return kind_; }

  // Throws RangeError outside the trap's valid field range.
  TrapFrequencies frequencies(double B_gauss) const;

  std::array<double, 3> fractional_uncertainties() const { return frac_unc_; }

  // Fractional uncertainty of the geometric-mean frequency, axis
  // uncertainties combined in quadrature.
  double mean_frequency_fractional_uncertainty() const;

 private:
  TrapConfig(TrapKind kind, TrapFrequencies nu, std::array<double, 3> frac_unc)
      : kind_(kind), custom_nu_(nu), frac_unc_(frac_unc) {}
  TrapKind kind_;
  TrapFrequencies custom_nu_;
  std::array<double, 3> frac_unc_;
};

// Geometric mean (nu_x*nu_y*nu_z)^(1/3). Throws DomainError unless all
// three are positive.
double mean_frequency(const TrapFrequencies& nu);

// Atoms per spin state, temperature and field of an equally populated
// three-state mixture.
struct GasState {
  double N;        // atoms per spin state, >= 0
  double T;        // K, > 0
  double B_gauss;  // G
};

// Peak density per spin state of a thermal cloud,
// n0 = N * (2*pi*m*nubar^2 / (kB*T))^(3/2), in m^-3.
double peak_density(const GasState& s, double nubar_hz, const PhysicalConstants& pc);

// <n^2> = n0^2 / sqrt(27) for a thermal harmonic-trap distribution, in m^-6.
double density_squared_average(const GasState& s, double nubar_hz, const PhysicalConstants& pc);

// kB*T_F = h*nubar*(6N)^(1/3); N >= 1. Result in K.
double fermi_temperature(double N, double nubar_hz, const PhysicalConstants& pc);

}  // namespace trigas
