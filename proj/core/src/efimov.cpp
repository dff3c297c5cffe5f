#include "trigas/efimov.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace trigas {

ScalingFactors scaling_factors(const UniversalConstants& u) {
  const double lambda = std::exp(std::numbers::pi / u.s0);
  return ScalingFactors{lambda, std::exp(2.0 * std::numbers::pi / u.s0)};
}

double binding_energy_at_unitarity(const EfimovParams& p, int n, const UniversalConstants& u,
                                   const PhysicalConstants& pc) {
  if (n < 0) throw DomainError("binding_energy_at_unitarity: n must be >= 0");
  const double e0 = pc.hbar * pc.hbar * p.kappa_star * p.kappa_star / pc.m;
  return std::exp(-2.0 * std::numbers::pi * n / u.s0) * e0;
}

double resonance_scattering_length(const EfimovParams& p, const UniversalConstants& u, int n) {
  if (n < 0) throw DomainError("resonance_scattering_length: n must be >= 0");
  return -std::exp(std::numbers::pi * n / u.s0) / (u.D * p.kappa_star);
}

TrimerWidth trimer_width(double binding_energy_joule, const EfimovParams& p,
                         const UniversalConstants& u, const PhysicalConstants& pc) {
  if (!(binding_energy_joule > 0.0))
    throw DomainError("trimer_width: binding energy must be positive");
  const double gamma = 4.0 * p.eta_star / u.s0 * binding_energy_joule / pc.hbar;
  const double lifetime =
      gamma > 0.0 ? 1.0 / gamma : std::numeric_limits<double>::infinity();
  return TrimerWidth{gamma, lifetime};
}

}  // namespace trigas
