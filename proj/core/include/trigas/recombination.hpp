#pragma once

#include <span>
#include <vector>

#include "trigas/constants.hpp"
#include "trigas/efimov.hpp"
#include "trigas/errors.hpp"
#include "trigas/scattering.hpp"

namespace trigas {

// Zero-temperature three-body recombination rate constant for three
// distinguishable fermions with equal negative scattering lengths:
//
//   L3 = 16*pi^2*C*sinh(2*eta*) / (sin^2[s0*ln(D*|a|*kappa*)] + sinh^2(eta*))
//        * hbar*a^4/m
//
// a in m (must be < 0), result in m^6/s. Resonant at a = a_n^-, where the
// sine vanishes. eta* = 0 off resonance gives exactly 0; eta* = 0 exactly
// on resonance throws SingularModelError.
double l3_equal_a(double a_m, const EfimovParams& p, const UniversalConstants& u,
                  const PhysicalConstants& pc);

// Finite-temperature unitarity bound sqrt(108)*pi^2*hbar^5 / (m^3*(kB*T)^2),
// in m^6/s. Throws DomainError for T <= 0.
double l3_max(double T_kelvin, const PhysicalConstants& pc);

// Harmonic ("unitarized") combination (1/L3 + 1/L3sat)^-1. Both inputs
// must be positive.
double l3_unitarized(double L3, double L3sat);

// Temperature below which collisions are in the threshold regime,
// kB*T = 0.158*hbar^2/(m*a^2) (the three-body barrier height). a in m,
// any sign, nonzero; result in K.
double threshold_temperature(double a_m, const PhysicalConstants& pc);

// Heuristic reduction of an unequal all-negative triple to one effective
// scattering length: the (negative) geometric mean, in the same a0 units
// as the triple. This is a documented stand-in for the full unequal-a
// coupled-channel calculation, which is out of scope; it preserves the
// resonance phenomenology and the a^4 envelope but is only qualitatively
// accurate. Throws DomainError unless all three lengths are negative.
double effective_a(const ScatteringTriple& triple);

// Model curve over a field grid: zero-temperature rate through
// effective_a, plus the unitarized variant saturating at l3_max(T)/3.
struct L3CurvePoint {
  double B_gauss;
  double L3_zero_T;      // m^6/s
  double L3_unitarized;  // m^6/s
};

std::vector<L3CurvePoint> l3_model_curve(const ScatteringTable& table, const EfimovParams& p,
                                         const UniversalConstants& u, const PhysicalConstants& pc,
                                         double T_kelvin, std::span<const double> B_grid_gauss);

// Fields where an Efimov trimer crosses threshold in the effective-a
// model, i.e. where s0*ln(D*|a_eff(B)|*kappa*)/pi crosses an integer
// n >= 0. Found by sign-change bracketing on the table nodes plus
// bisection to 0.01 G. Empty when nothing crosses.
struct ResonanceCrossing {
  double B_gauss;
  int n_branch;
};

std::vector<ResonanceCrossing> scan_resonance_fields(const ScatteringTable& table,
                                                     const EfimovParams& p,
                                                     const UniversalConstants& u,
                                                     const PhysicalConstants& pc);

}  // namespace trigas
