#pragma once

#include <numbers>

#include "trigas/errors.hpp"

namespace trigas {

// Fundamental constants and the 6Li atomic parameters, all in SI units.
//
// Every formula in the library computes in SI; presentation units
// (a0, Gauss, nK, kHz, cm^6/s) appear only at I/O boundaries (see
// units.hpp and the CLI). h is always stored as 2*pi*hbar so the pair
// stays consistent when hbar is overridden.
struct PhysicalConstants {
  double hbar;  // reduced Planck constant (J s)
  double h;     // Planck constant (J s), == 2*pi*hbar
  double kB;    // Boltzmann constant (J/K)
  double m;     // mass of one 6Li atom (kg)
  double a0;    // Bohr radius (m)

  // CODATA-2018 constants with m(6Li) = 6.0151228 u.
  static PhysicalConstants li6() {
    return with(6.62607015e-34 / (2.0 * std::numbers::pi),
                1.380649e-23, 9.98834e-27, 5.29177210903e-11);
  }

  // Build a consistent set from overrides (h derived from hbar).
  static PhysicalConstants with(double hbar, double kB, double m, double a0) {
    if (!(hbar > 0.0) || !(kB > 0.0) || !(m > 0.0) || !(a0 > 0.0))
      throw DomainError("PhysicalConstants: all constants must be strictly positive");
    return PhysicalConstants{hbar, 2.0 * std::numbers::pi * hbar, kB, m, a0};
  }
};

}  // namespace trigas
