#include "trigas/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>

#include "csv_util.hpp"
#include "nelder_mead.hpp"
#include "trigas/recombination.hpp"

namespace trigas {

ChiSquared chi_squared(std::span<const double> residuals, std::span<const double> sigmas,
                       int dof) {
  if (residuals.size() != sigmas.size())
    throw DomainError("chi_squared: residuals and sigmas differ in length");
  if (dof < 1) throw DomainError("chi_squared: dof must be >= 1");
  double chi2 = 0.0;
  for (size_t i = 0; i < residuals.size(); ++i) {
    if (!(sigmas[i] > 0.0)) throw DomainError("chi_squared: sigmas must be positive");
    const double r = residuals[i] / sigmas[i];
    chi2 += r * r;
  }
  return ChiSquared{chi2, chi2 / dof};
}

namespace {

constexpr double kPenalty = 1e300;

// Central-difference Hessian of chi2 at the optimum; 2x2 is all the
// fitters need. Returns one-sigma uncertainties via cov = 2*H^-1, or
// zeros when the quadratic approximation is unusable.
std::array<double, 2> hessian_sigmas(const std::function<double(const std::vector<double>&)>& f,
                                     const std::vector<double>& p,
                                     const std::array<double, 2>& scale) {
  std::array<double, 2> h{};
  for (int i = 0; i < 2; ++i) h[i] = 1e-4 * std::max(std::abs(p[i]), scale[i]);

  auto at = [&](double d0, double d1) {
    std::vector<double> q = p;
    q[0] += d0;
    q[1] += d1;
    return f(q);
  };
  const double f0 = at(0, 0);
  double H00 = (at(h[0], 0) - 2 * f0 + at(-h[0], 0)) / (h[0] * h[0]);
  double H11 = (at(0, h[1]) - 2 * f0 + at(0, -h[1])) / (h[1] * h[1]);
  double H01 = (at(h[0], h[1]) - at(h[0], -h[1]) - at(-h[0], h[1]) + at(-h[0], -h[1])) /
               (4 * h[0] * h[1]);

  const double det = H00 * H11 - H01 * H01;
  if (!(det > 0.0) || !(H00 > 0.0)) return {0.0, 0.0};
  // cov = 2 H^-1 for the chi2 Hessian.
  const double c00 = 2.0 * H11 / det;
  const double c11 = 2.0 * H00 / det;
  if (!(c00 >= 0.0) || !(c11 >= 0.0)) return {0.0, 0.0};
  return {std::sqrt(c00), std::sqrt(c11)};
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    const double lower = *std::max_element(v.begin(), v.begin() + mid);
    m = 0.5 * (m + lower);
  }
  return m;
}

}  // namespace

FitResult fit_decay(const DecaySeries& series, const TrapConfig& trap, double B_gauss,
                    double Gamma, const PhysicalConstants& pc) {
  if (series.samples.size() < 4)
    throw InsufficientDataError("fit_decay: need at least 4 samples, got " +
                                std::to_string(series.samples.size()));
  if (!(Gamma >= 0.0)) throw DomainError("fit_decay: Gamma must be >= 0");

  std::vector<DecaySample> samples = series.samples;
  std::sort(samples.begin(), samples.end(),
            [](const DecaySample& a, const DecaySample& b) { return a.t < b.t; });
  const size_t n = samples.size();

  bool weighted = true;
  for (const DecaySample& s : samples) weighted = weighted && s.sigma_N > 0.0;

  // Constant-T model: the temperature samples pin T (N(t) alone cannot
  // separate L3 from T; both enter only through beta ~ L3/T^3).
  double t_sum = 0.0;
  for (const DecaySample& s : samples) t_sum += s.T;
  const double T_hat = t_sum / n;
  double t_var = 0.0;
  for (const DecaySample& s : samples) t_var += (s.T - T_hat) * (s.T - T_hat);
  const double sigma_T = n > 1 ? std::sqrt(t_var / (n - 1) / n) : 0.0;

  const double nubar = mean_frequency(trap.frequencies(B_gauss));
  const double beta_per_l3 = three_body_beta(1.0, T_hat, nubar, pc);

  // Crude slope-based seed: beta from (-dN/dt - Gamma N)/N^3 per interval.
  std::vector<double> beta_estimates;
  for (size_t i = 0; i + 1 < n; ++i) {
    const double dt = samples[i + 1].t - samples[i].t;
    if (!(dt > 0.0)) continue;
    const double slope = (samples[i + 1].N - samples[i].N) / dt;
    const double Nm = 0.5 * (samples[i].N + samples[i + 1].N);
    beta_estimates.push_back((-slope - Gamma * Nm) / (Nm * Nm * Nm));
  }
  const double l3_seed = median(beta_estimates) / beta_per_l3;

  double n_max = 0.0;
  for (const DecaySample& s : samples) n_max = std::max(n_max, s.N);
  const double t_end = samples.back().t - samples.front().t;
  const double l3_floor = 0.05 / (beta_per_l3 * n_max * n_max * std::max(t_end, 1e-12));
  const double l3_scale = std::max(std::abs(l3_seed), l3_floor);
  const double n0_scale = n_max;

  auto objective = [&](const std::vector<double>& p) {
    const double l3 = p[0] * l3_scale;
    const double n0 = p[1] * n0_scale;
    if (!(n0 > 0.0)) return kPenalty;
    const double beta = l3 * beta_per_l3;
    double chi2 = 0.0;
    for (const DecaySample& s : samples) {
      const double model = closed_form_number(n0, Gamma, beta, s.t);
      if (!std::isfinite(model)) return kPenalty;
      const double r = (s.N - model) / (weighted ? s.sigma_N : 1.0);
      chi2 += r * r;
    }
    return chi2;
  };

  const double n0_start = samples.front().N / n0_scale;
  const std::vector<std::vector<double>> starts = {
      {l3_seed / l3_scale, n0_start},
      {0.0, n0_start},
      {5.0 * l3_seed / l3_scale, n0_start},
      {l3_seed / (5.0 * l3_scale), n0_start},
  };

  detail::SimplexResult best;
  best.fmin = std::numeric_limits<double>::infinity();
  for (const auto& x0 : starts) {
    auto r = detail::nelder_mead(objective, x0, {0.3, 0.05});
    if (r.fmin < best.fmin) best = std::move(r);
  }

  const double l3_fit = best.x[0] * l3_scale;
  const double n0_fit = best.x[1] * n0_scale;
  const int dof = static_cast<int>(n) - 3;

  auto sig = hessian_sigmas(objective, best.x, {1.0, 1.0});
  double sigma_l3 = sig[0] * l3_scale;
  double sigma_n0 = sig[1] * n0_scale;
  if (!weighted && dof > 0 && best.fmin > 0.0 && best.fmin < kPenalty) {
    // Unknown sigmas: scale the covariance by the reduced chi2.
    const double s = std::sqrt(best.fmin / dof);
    sigma_l3 *= s;
    sigma_n0 *= s;
  }
  // Trap-frequency uncertainty in quadrature: L3 ~ nubar^-6 at fixed N, T.
  const double frac_nubar = trap.mean_frequency_fractional_uncertainty();
  sigma_l3 = std::sqrt(sigma_l3 * sigma_l3 +
                       36.0 * frac_nubar * frac_nubar * l3_fit * l3_fit);

  FitResult out;
  out.params = {{"L3", l3_fit}, {"N0", n0_fit}, {"T", T_hat}};
  out.uncertainties = {{"L3", sigma_l3}, {"N0", sigma_n0}, {"T", sigma_T}};
  out.chi2 = best.fmin;
  out.dof = dof;
  out.converged = best.converged && best.fmin < kPenalty;
  return out;
}

std::vector<L3Point> load_l3_points(std::istream& in) {
  std::string line;
  if (!csv::next_line(in, line)) throw ParseError("L3 points: empty input");
  if (line != "B_gauss,L3_cm6_per_s,sigma_L3")
    throw ParseError("L3 points: expected header 'B_gauss,L3_cm6_per_s,sigma_L3', got '" + line +
                     "'");
  std::vector<L3Point> points;
  size_t row_index = 0;
  constexpr double kCm6 = 1e-12;  // cm^6/s -> m^6/s
  while (csv::next_line(in, line)) {
    ++row_index;
    const std::string where = "L3 points row " + std::to_string(row_index);
    auto fields = csv::split_fields(line);
    if (fields.size() != 3)
      throw ParseError(where + ": expected 3 fields, got " + std::to_string(fields.size()));
    L3Point p{};
    p.B_gauss = csv::parse_double(fields[0], where);
    p.L3 = csv::parse_double(fields[1], where) * kCm6;
    p.sigma_L3 = csv::parse_double(fields[2], where) * kCm6;
    if (!std::isfinite(p.B_gauss) || !std::isfinite(p.L3) || !std::isfinite(p.sigma_L3))
      throw ParseError(where + ": non-finite entry");
    points.push_back(p);
  }
  return points;
}

std::vector<L3Point> load_l3_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open L3 points '" + path + "'");
  return load_l3_points(in);
}

FitResult fit_efimov(std::span<const L3Point> points, const ScatteringTable& table,
                     const UniversalConstants& u, const PhysicalConstants& pc,
                     const EfimovFitOptions& options) {
  if (points.size() < 3)
    throw InsufficientDataError("fit_efimov: need at least 3 points, got " +
                                std::to_string(points.size()));
  bool all_same_field = true;
  for (const L3Point& p : points) all_same_field = all_same_field && p.B_gauss == points[0].B_gauss;
  if (all_same_field)
    throw InsufficientDataError("fit_efimov: degenerate data (all points at one field)");
  if (options.unitarized && !(options.T_kelvin > 0.0))
    throw DomainError("fit_efimov: unitarized variant requires a positive temperature");

  const size_t n = points.size();
  std::vector<double> a_eff_m(n), log_data(n), sigma_log(n);
  bool weighted = true;
  for (size_t i = 0; i < n; ++i) {
    if (!(points[i].L3 > 0.0)) throw DomainError("fit_efimov: L3 data must be positive");
    a_eff_m[i] = effective_a(table.at(points[i].B_gauss)) * pc.a0;
    log_data[i] = std::log(points[i].L3);
    weighted = weighted && points[i].sigma_L3 > 0.0;
    sigma_log[i] = points[i].sigma_L3 / points[i].L3;
  }

  const double l3sat =
      options.unitarized ? l3_max(options.T_kelvin, pc) / 3.0 : 0.0;

  auto model_log = [&](size_t i, const EfimovParams& p) {
    double v = l3_equal_a(a_eff_m[i], p, u, pc);
    if (options.unitarized) v = l3_unitarized(v, l3sat);
    return std::log(v);
  };

  auto objective = [&](const std::vector<double>& x) {
    const EfimovParams p(std::exp(x[0]), std::exp(x[1]));
    double chi2 = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const double m = model_log(i, p);
      if (!std::isfinite(m)) return kPenalty;
      const double r = (log_data[i] - m) / (weighted ? sigma_log[i] : 1.0);
      chi2 += r * r;
    }
    return chi2;
  };

  // One full log-period of kappa*, anchored so the largest |a_eff| in the
  // data corresponds to the n = 0 branch.
  double a_eff_max = 0.0;
  for (double a : a_eff_m) a_eff_max = std::max(a_eff_max, -a);
  const double kappa_lo = 1.0 / (u.D * a_eff_max);
  const double lambda = scaling_factors(u).length;

  detail::SimplexResult best;
  best.fmin = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 8; ++j) {
    const double kappa0 = kappa_lo * std::pow(lambda, (j + 0.5) / 8.0);
    for (double eta0 : {0.005, 0.02, 0.1}) {
      auto r = detail::nelder_mead(objective, {std::log(kappa0), std::log(eta0)}, {0.15, 0.5});
      if (r.fmin < best.fmin) best = std::move(r);
    }
  }

  // Canonicalize kappa* into [kappa_lo, kappa_lo*lambda); the model is
  // exactly periodic so this is a pure representative choice.
  double log_kappa = best.x[0];
  const double log_lambda = std::log(lambda);
  const double k_shift = std::floor((log_kappa - std::log(kappa_lo)) / log_lambda);
  log_kappa -= k_shift * log_lambda;
  best.x[0] = log_kappa;

  const double kappa_fit = std::exp(log_kappa);
  const double eta_fit = std::exp(best.x[1]);
  const int dof = static_cast<int>(n) - 2;

  auto sig = hessian_sigmas(objective, best.x, {1.0, 1.0});
  double sigma_kappa = kappa_fit * sig[0];
  double sigma_eta = eta_fit * sig[1];
  if (!weighted && dof > 0 && best.fmin > 0.0 && best.fmin < kPenalty) {
    const double s = std::sqrt(best.fmin / dof);
    sigma_kappa *= s;
    sigma_eta *= s;
  }

  FitResult out;
  out.params = {{"kappa_star", kappa_fit}, {"eta_star", eta_fit}};
  out.uncertainties = {{"kappa_star", sigma_kappa}, {"eta_star", sigma_eta}};
  out.chi2 = best.fmin;
  out.dof = dof;
  out.converged = best.converged && best.fmin < kPenalty;
  return out;
}

}  // namespace trigas
