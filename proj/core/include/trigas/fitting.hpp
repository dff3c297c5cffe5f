#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "trigas/constants.hpp"
#include "trigas/dynamics.hpp"
#include "trigas/efimov.hpp"
#include "trigas/errors.hpp"
#include "trigas/scattering.hpp"
#include "trigas/trap.hpp"

namespace trigas {

// Result of a least-squares fit. Parameter keys:
//   fit_decay:  "L3" (m^6/s), "N0" (atoms), "T" (K)
//   fit_efimov: "kappa_star" (1/m), "eta_star"
// Uncertainties are one sigma from the local quadratic approximation of
// chi^2 at the optimum (scaled by chi^2/dof when the data carried no
// sigmas), with trap-frequency uncertainty folded into L3 in quadrature.
struct FitResult {
  std::map<std::string, double> params;
  std::map<std::string, double> uncertainties;
  double chi2 = 0.0;
  int dof = 0;
  bool converged = false;
};

struct ChiSquared {
  double chi2;
  double reduced;  // chi2 / dof
};

// Weighted sum of squares sum((r_i/sigma_i)^2). Throws DomainError on
// length mismatch, non-positive sigma, or dof < 1.
ChiSquared chi_squared(std::span<const double> residuals, std::span<const double> sigmas, int dof);

// Extracts (L3, N0, T) from one decay series at fixed field and one-body
// rate. N(t) alone cannot separate L3 from T (both enter only through the
// density factor beta ~ L3/T^3), so T is pinned by the series' temperature
// samples (their mean under the constant-T model) and chi^2 is minimized
// over (L3, N0). Non-convergence is reported through the flag with the
// best parameters so far; fewer than 4 samples is an error.
FitResult fit_decay(const DecaySeries& series, const TrapConfig& trap, double B_gauss,
                    double Gamma, const PhysicalConstants& pc);

// One measured rate constant per field.
struct L3Point {
  double B_gauss;
  double L3;        // m^6/s, > 0
  double sigma_L3;  // m^6/s, 0 = none
};

// CSV with header `B_gauss,L3_cm6_per_s,sigma_L3` (presentation units);
// returns points converted to m^6/s.
std::vector<L3Point> load_l3_points(std::istream& in);
std::vector<L3Point> load_l3_points_file(const std::string& path);

struct EfimovFitOptions {
  // Fit the unitarized curve (saturating at l3_max(T)/3) instead of the
  // zero-temperature model.
  bool unitarized = false;
  double T_kelvin = 0.0;  // required when unitarized
};

// Global fit of (kappa*, eta*) to L3(B) data in log space, through the
// effective-a model curve. The model is exactly periodic in kappa* under
// kappa* -> e^{pi/s0} kappa*, so the returned kappa* is canonicalized to
// [1/(D*max|a_eff|), e^{pi/s0}/(D*max|a_eff|)) -- the window in which the
// largest |a_eff| among the data corresponds to the n = 0 branch -- and
// the multistart grid spans exactly that one period.
FitResult fit_efimov(std::span<const L3Point> points, const ScatteringTable& table,
                     const UniversalConstants& u, const PhysicalConstants& pc,
                     const EfimovFitOptions& options = {});

}  // namespace trigas
