#pragma once

#include "trigas/constants.hpp"
#include "trigas/errors.hpp"

namespace trigas {

// The complex three-body parameter pair (kappa*, eta*). kappa* fixes the
// absolute position of the trimer spectrum, eta* its decay width into
// deeply bound dimers. kappa* is stored in SI (1/m); use from_inv_a0()
// when starting from Bohr-radius units.
struct EfimovParams {
  double kappa_star;  // 1/m, > 0
  double eta_star;    // dimensionless, >= 0

  EfimovParams(double kappa_star_inv_m, double eta)
      : kappa_star(kappa_star_inv_m), eta_star(eta) {
    if (!(kappa_star > 0.0)) throw DomainError("EfimovParams: kappa_star must be positive");
    if (!(eta_star >= 0.0)) throw DomainError("EfimovParams: eta_star must be non-negative");
  }

  static EfimovParams from_inv_a0(double kappa_star_inv_a0, double eta,
                                  const PhysicalConstants& pc) {
    return EfimovParams(kappa_star_inv_a0 / pc.a0, eta);
  }
};

// Universal constants of the zero-range three-body problem. s0 is the
// scaling exponent; C and D enter the equal-scattering-length
// recombination rate. The numerical uncertainties quoted for C and D are
// kept as metadata for documentation and error budgets.
struct UniversalConstants {
  double s0 = 1.00624;
  double C = 29.62;
  double D = 0.6642;

  static constexpr double C_uncertainty = 0.01;
  static constexpr double D_uncertainty = 2e-4;
};

// Discrete scaling factors of the spectrum: e^{pi/s0} (~22.7) between
// threshold scattering lengths and e^{2*pi/s0} (~515) between binding
// energies.
struct ScalingFactors {
  double length;  // e^{pi/s0}
  double energy;  // e^{2*pi/s0}
};

ScalingFactors scaling_factors(const UniversalConstants& u);

// |E_n| = e^{-2*pi*n/s0} * hbar^2 * kappa*^2 / m, returned as a positive
// binding-energy magnitude in J (bound states sit below threshold).
// Throws DomainError for n < 0.
double binding_energy_at_unitarity(const EfimovParams& p, int n, const UniversalConstants& u,
                                   const PhysicalConstants& pc);

// Threshold-crossing scattering length a_n^- = -e^{pi*n/s0} / (D*kappa*),
// in m (negative). Throws DomainError for n < 0.
double resonance_scattering_length(const EfimovParams& p, const UniversalConstants& u, int n);

// Trimer decay width and lifetime from the binding energy:
// gamma*hbar = (4*eta*/s0)*E. This relation is not unique in the
// literature; it is adopted here because it reproduces the known
// (E0 = h x 24 MHz, eta* = 0.016) -> gamma = 2*pi x 1.5 MHz benchmark to
// a couple of percent. eta* = 0 gives gamma = 0 and an infinite lifetime.
struct TrimerWidth {
  double gamma;     // angular frequency (rad/s)
  double lifetime;  // s, +inf when gamma == 0
};

TrimerWidth trimer_width(double binding_energy_joule, const EfimovParams& p,
                         const UniversalConstants& u, const PhysicalConstants& pc);

}  // namespace trigas
