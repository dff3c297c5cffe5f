#include "trigas/dynamics.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <random>

#include "csv_util.hpp"
#include "ode_rkdp.hpp"

namespace trigas {

namespace {

void validate_model(const DecayModel& m) {
  if (!(m.Gamma >= 0.0)) throw DomainError("DecayModel: Gamma must be >= 0");
  if (!(m.L3 >= 0.0)) throw DomainError("DecayModel: L3 must be >= 0");
}

}  // namespace

double three_body_beta(double L3_m6s, double T_kelvin, double nubar_hz,
                       const PhysicalConstants& pc) {
  if (!(T_kelvin > 0.0)) throw DomainError("three_body_beta: temperature must be positive");
  const double x = 2.0 * std::numbers::pi * pc.m * nubar_hz * nubar_hz / (pc.kB * T_kelvin);
  return L3_m6s / std::sqrt(27.0) * x * x * x;
}

double closed_form_number(double N0, double Gamma, double beta, double t) {
  // (1 - e^{-2 Gamma t}) / Gamma, stable limit 2t as Gamma -> 0.
  const double u = Gamma > 0.0 ? -std::expm1(-2.0 * Gamma * t) / Gamma : 2.0 * t;
  const double radicand = 1.0 + beta * N0 * N0 * u;
  if (!(radicand > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return N0 * std::exp(-Gamma * t) / std::sqrt(radicand);
}

double number_analytic(const DecayModel& m, double N0, double T_kelvin, double t,
                       const PhysicalConstants& pc) {
  validate_model(m);
  if (!(t >= 0.0)) throw DomainError("number_analytic: t must be >= 0");
  if (m.anti_evaporation)
    throw DomainError("number_analytic: constant-T closed form requires anti_evaporation = false");
  const double nubar = mean_frequency(m.trap.frequencies(m.B_gauss));
  const double beta = three_body_beta(m.L3, T_kelvin, nubar, pc);
  return closed_form_number(N0, m.Gamma, beta, t);
}

std::vector<EvolvePoint> evolve_numeric(const DecayModel& m, double N0, double T0_kelvin,
                                        std::span<const double> t_grid,
                                        const PhysicalConstants& pc) {
  validate_model(m);
  if (!(N0 >= 0.0)) throw DomainError("evolve_numeric: N0 must be >= 0");
  if (!(T0_kelvin > 0.0)) throw DomainError("evolve_numeric: T0 must be positive");
  if (t_grid.empty()) return {};
  if (!(t_grid.front() >= 0.0)) throw DomainError("evolve_numeric: grid must start at t >= 0");
  for (size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw DomainError("evolve_numeric: time grid must be strictly increasing");

  const double nubar = mean_frequency(m.trap.frequencies(m.B_gauss));
  // beta(T) = beta_T0 * (T0/T)^3; keeping the prefactor fixed avoids
  // re-deriving the trap factor inside the RHS.
  const double beta_T0 = three_body_beta(m.L3, T0_kelvin, nubar, pc);
  const bool heat = m.anti_evaporation;

  using State = detail::State<2>;
  auto rhs = [&](double, const State& y) -> State {
    const double N = y[0];
    const double T = y[1];
    const double ratio = T0_kelvin / T;
    const double beta = beta_T0 * ratio * ratio * ratio;
    const double three_body_rate = beta * N * N;  // = L3 <n^2>, per atom
    State dy;
    dy[0] = -m.Gamma * N - three_body_rate * N;
    dy[1] = heat ? (T / 3.0) * three_body_rate : 0.0;
    return dy;
  };

  std::vector<EvolvePoint> out;
  out.reserve(t_grid.size());
  State y{N0, T0_kelvin};
  double t = t_grid.front() > 0.0 ? 0.0 : t_grid.front();
  const State atol{1e-6, T0_kelvin * 1e-12};
  for (double t_target : t_grid) {
    y = detail::rkdp_integrate<2>(rhs, t, y, t_target, 1e-10, atol);
    t = t_target;
    out.push_back(EvolvePoint{t, y[0], y[1]});
  }
  return out;
}

void DecaySeries::validate() const {
  for (size_t i = 0; i < samples.size(); ++i) {
    const DecaySample& s = samples[i];
    const std::string where = "decay series sample " + std::to_string(i + 1);
    if (!std::isfinite(s.t) || !std::isfinite(s.N) || !std::isfinite(s.T))
      throw ParseError(where + ": non-finite entry");
    if (!(s.N > 0.0) || !(s.T > 0.0)) throw ParseError(where + ": N and T must be positive");
    if (!(s.sigma_N >= 0.0)) throw ParseError(where + ": sigma_N must be >= 0");
    if (i > 0 && !(s.t > samples[i - 1].t))
      throw ParseError(where + ": t must be strictly increasing");
  }
}

DecaySeries DecaySeries::load(std::istream& in) {
  std::string line;
  if (!csv::next_line(in, line)) throw ParseError("decay series: empty input");
  size_t ncols = 0;
  if (line == "t_s,N,T_K,sigma_N")
    ncols = 4;
  else if (line == "t_s,N,T_K")
    ncols = 3;
  else
    throw ParseError("decay series: expected header 't_s,N,T_K,sigma_N', got '" + line + "'");

  DecaySeries series;
  size_t row_index = 0;
  while (csv::next_line(in, line)) {
    ++row_index;
    const std::string where = "decay series row " + std::to_string(row_index);
    auto fields = csv::split_fields(line);
    if (fields.size() != ncols)
      throw ParseError(where + ": expected " + std::to_string(ncols) + " fields, got " +
                       std::to_string(fields.size()));
    DecaySample s{};
    s.t = csv::parse_double(fields[0], where);
    s.N = csv::parse_double(fields[1], where);
    s.T = csv::parse_double(fields[2], where);
    s.sigma_N = ncols == 4 ? csv::parse_double(fields[3], where) : 0.0;
    series.samples.push_back(s);
  }
  series.validate();
  return series;
}

DecaySeries DecaySeries::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open decay series '" + path + "'");
  return load(in);
}

DecaySeries synthesize(const DecayModel& m, double N0, double T0_kelvin,
                       std::span<const double> t_grid, double noise_frac, std::uint64_t seed,
                       const PhysicalConstants& pc) {
  if (!(noise_frac >= 0.0)) throw DomainError("synthesize: noise_frac must be >= 0");

  std::vector<EvolvePoint> truth;
  if (m.anti_evaporation) {
    truth = evolve_numeric(m, N0, T0_kelvin, t_grid, pc);
  } else {
    truth.reserve(t_grid.size());
    for (double t : t_grid)
      truth.push_back(EvolvePoint{t, number_analytic(m, N0, T0_kelvin, t, pc), T0_kelvin});
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DecaySeries series;
  series.samples.reserve(truth.size());
  for (const EvolvePoint& p : truth) {
    DecaySample s{};
    s.t = p.t;
    s.T = p.T;
    s.sigma_N = noise_frac * p.N;
    s.N = noise_frac > 0.0 ? p.N * (1.0 + noise_frac * gauss(rng)) : p.N;
    // A wild draw must not produce an unphysical sample.
    if (s.N <= 0.0) s.N = 1e-9 * N0;
    series.samples.push_back(s);
  }
  series.validate();
  return series;
}

}  // namespace trigas
