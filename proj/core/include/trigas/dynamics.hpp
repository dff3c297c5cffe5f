#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "trigas/constants.hpp"
#include "trigas/errors.hpp"
#include "trigas/trap.hpp"

namespace trigas {

// Loss model for an equally populated three-state mixture:
//   dN/dt = -Gamma*N - L3*<n^2>,  <n^2> = (1/sqrt(27)) (2 pi m nubar^2/(kB T))^3 N^2
// With anti_evaporation set, recombination additionally heats the
// remaining cloud: dT/dt = (T/3)*L3*<n^2> (each loss event removes atoms
// carrying below-average energy).
struct DecayModel {
  double Gamma;  // one-body rate (1/s), >= 0
  double L3;     // m^6/s, >= 0
  TrapConfig trap;
  double B_gauss;
  bool anti_evaporation = false;
};

// Per-atom three-body coefficient beta so that dN/dt = -Gamma*N - beta*N^3.
double three_body_beta(double L3_m6s, double T_kelvin, double nubar_hz,
                       const PhysicalConstants& pc);

// Raw constant-temperature closed form N(t) for dN/dt = -Gamma*N - beta*N^3:
//   N(t) = N0 e^{-Gamma t} [1 + (beta N0^2/Gamma)(1 - e^{-2 Gamma t})]^{-1/2}
// with the Gamma -> 0 limit N0 (1 + 2 beta N0^2 t)^{-1/2}. Returns NaN if
// the radicand is non-positive (possible for negative trial beta during
// fitting).
double closed_form_number(double N0, double Gamma, double beta, double t);

// Closed-form N(t) for a validated model at constant temperature.
// Requires t >= 0 and anti_evaporation == false.
double number_analytic(const DecayModel& m, double N0, double T_kelvin, double t,
                       const PhysicalConstants& pc);

struct EvolvePoint {
  double t;  // s
  double N;  // atoms per spin state
  double T;  // K
};

// Adaptive numerical integration of the loss ODE on the given time grid
// (strictly increasing, starting at t >= 0). The temperature dependence of
// beta is re-evaluated continuously; with anti_evaporation the temperature
// equation is integrated alongside N. Relative tolerance 1e-10, absolute
// 1e-6 atoms.
std::vector<EvolvePoint> evolve_numeric(const DecayModel& m, double N0, double T0_kelvin,
                                        std::span<const double> t_grid,
                                        const PhysicalConstants& pc);

// A measured or synthetic decay series. sigma_N == 0 means "no uncertainty
// recorded" and the fit falls back to unit weights.
struct DecaySample {
  double t;        // s
  double N;        // atoms per spin state
  double T;        // K
  double sigma_N;  // atoms, 0 = none
};

struct DecaySeries {
  std::vector<DecaySample> samples;

  // CSV with header `t_s,N,T_K,sigma_N` (the sigma column may be absent).
  // Validates t strictly increasing and N, T positive.
  static DecaySeries load(std::istream& in);
  static DecaySeries load_file(const std::string& path);
  void validate() const;
};

// Forward model sampled on a grid with multiplicative Gaussian number
// noise: N_i = N(t_i) * (1 + noise_frac*xi_i), sigma_N = noise_frac*N(t_i).
// Identical seeds give identical series.
DecaySeries synthesize(const DecayModel& m, double N0, double T0_kelvin,
                       std::span<const double> t_grid, double noise_frac, std::uint64_t seed,
                       const PhysicalConstants& pc);

}  // namespace trigas
