#include "trigas/recombination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace trigas {

double l3_equal_a(double a_m, const EfimovParams& p, const UniversalConstants& u,
                  const PhysicalConstants& pc) {
  if (!(a_m < 0.0))
    throw DomainError("l3_equal_a: equal-negative-a formula only (a must be < 0)");
  const double abs_a = -a_m;
  const double s = std::sin(u.s0 * std::log(u.D * abs_a * p.kappa_star));
  const double sin2 = s * s;
  if (p.eta_star == 0.0) {
    if (sin2 == 0.0)
      throw SingularModelError("l3_equal_a: eta* = 0 exactly on resonance");
    return 0.0;
  }
  const double sh = std::sinh(p.eta_star);
  const double prefactor = 16.0 * std::numbers::pi * std::numbers::pi * u.C *
                           std::sinh(2.0 * p.eta_star) / (sin2 + sh * sh);
  const double a2 = abs_a * abs_a;
  return prefactor * pc.hbar * a2 * a2 / pc.m;
}

double l3_max(double T_kelvin, const PhysicalConstants& pc) {
  if (!(T_kelvin > 0.0)) throw DomainError("l3_max: temperature must be positive");
  const double kT = pc.kB * T_kelvin;
  const double h2 = pc.hbar * pc.hbar;
  const double hbar5 = h2 * h2 * pc.hbar;
  return std::sqrt(108.0) * std::numbers::pi * std::numbers::pi * hbar5 /
         (pc.m * pc.m * pc.m * kT * kT);
}

double l3_unitarized(double L3, double L3sat) {
  if (!(L3 > 0.0) || !(L3sat > 0.0))
    throw DomainError("l3_unitarized: both rates must be positive");
  return 1.0 / (1.0 / L3 + 1.0 / L3sat);
}

double threshold_temperature(double a_m, const PhysicalConstants& pc) {
  if (a_m == 0.0 || !std::isfinite(a_m))
    throw DomainError("threshold_temperature: a must be nonzero and finite");
  return 0.158 * pc.hbar * pc.hbar / (pc.m * a_m * a_m * pc.kB);
}

double effective_a(const ScatteringTriple& triple) {
  if (!(triple.a12_a0 < 0.0) || !(triple.a23_a0 < 0.0) || !(triple.a13_a0 < 0.0))
    throw DomainError("effective_a: defined only for all-negative triples (B = " +
                      std::to_string(triple.B_gauss) + " G)");
  return -std::cbrt(-triple.a12_a0 * triple.a23_a0 * triple.a13_a0);
}

std::vector<L3CurvePoint> l3_model_curve(const ScatteringTable& table, const EfimovParams& p,
                                         const UniversalConstants& u, const PhysicalConstants& pc,
                                         double T_kelvin, std::span<const double> B_grid_gauss) {
  const double l3sat = l3_max(T_kelvin, pc) / 3.0;
  std::vector<L3CurvePoint> out;
  out.reserve(B_grid_gauss.size());
  for (double B : B_grid_gauss) {
    const ScatteringTriple triple = table.at(B);
    const double a_eff_m = effective_a(triple) * pc.a0;
    const double zero_t = l3_equal_a(a_eff_m, p, u, pc);
    // eta* = 0 gives a zero rate; the harmonic combination degenerates to 0.
    const double unitarized = zero_t > 0.0 ? l3_unitarized(zero_t, l3sat) : 0.0;
    out.push_back(L3CurvePoint{B, zero_t, unitarized});
  }
  return out;
}

namespace {

// Resonance-branch coordinate: crosses integer n exactly where the sine
// in l3_equal_a vanishes, i.e. where |a_eff| = |a_n^-|.
double branch_coordinate(const ScatteringTable& table, const EfimovParams& p,
                         const UniversalConstants& u, const PhysicalConstants& pc, double B) {
  const double a_eff_m = effective_a(table.at(B)) * pc.a0;
  return u.s0 * std::log(u.D * (-a_eff_m) * p.kappa_star) / std::numbers::pi;
}

}  // namespace

std::vector<ResonanceCrossing> scan_resonance_fields(const ScatteringTable& table,
                                                     const EfimovParams& p,
                                                     const UniversalConstants& u,
                                                     const PhysicalConstants& pc) {
  constexpr double kFieldTolGauss = 0.01;
  auto f = [&](double B) { return branch_coordinate(table, p, u, pc, B); };

  std::vector<ResonanceCrossing> out;
  const auto& rows = table.rows();
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    double b_lo = rows[i].B_gauss;
    double b_hi = rows[i + 1].B_gauss;
    const double f_lo = f(b_lo);
    const double f_hi = f(b_hi);
    const int n_min = std::max(0, static_cast<int>(std::ceil(std::min(f_lo, f_hi))));
    const int n_max = static_cast<int>(std::floor(std::max(f_lo, f_hi)));
    for (int n = n_min; n <= n_max; ++n) {
      // Skip a crossing that sits exactly on the left node of any interval
      // after the first: the previous interval already reported it.
      if (i > 0 && f_lo == static_cast<double>(n)) continue;
      double lo = b_lo;
      double hi = b_hi;
      double g_lo = f_lo - n;
      while (hi - lo > kFieldTolGauss) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = f(mid) - n;
        if ((g_lo <= 0.0) == (g_mid <= 0.0)) {
          lo = mid;
          g_lo = g_mid;
        } else {
          hi = mid;
        }
      }
      out.push_back(ResonanceCrossing{0.5 * (lo + hi), n});
    }
  }
  std::sort(out.begin(), out.end(), [](const ResonanceCrossing& a, const ResonanceCrossing& b) {
    return a.B_gauss < b.B_gauss;
  });
  return out;
}

}  // namespace trigas
