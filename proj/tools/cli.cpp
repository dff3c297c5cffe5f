#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trigas/config.hpp"
#include "trigas/dynamics.hpp"
#include "trigas/efimov.hpp"
#include "trigas/fitting.hpp"
#include "trigas/recombination.hpp"
#include "trigas/scattering.hpp"
#include "trigas/trap.hpp"
#include "trigas/units.hpp"

namespace trigas::cli {

namespace {

// Missing required settings and similar command-line-level problems.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// All keys the flat config file may contain; anything else is rejected.
const std::set<std::string>& known_config_keys() {
  static const std::set<std::string> keys = {
      "constants.hbar_J_s", "constants.kB_J_per_K", "constants.m_kg", "constants.a0_m",
      "table",
      "efimov.kappa_star_inv_a0", "efimov.eta_star",
      "trap.kind", "trap.nu_x_Hz", "trap.nu_y_Hz", "trap.nu_z_Hz",
      "trap.frac_unc_x", "trap.frac_unc_y", "trap.frac_unc_z",
      "gas.N", "gas.T_nK", "gas.B_gauss",
      "decay.Gamma_per_s", "decay.L3_cm6_per_s", "decay.anti_evaporation",
      "sim.t_max_s", "sim.samples", "sim.noise_frac", "sim.seed",
      "spectrum.n_max",
      "curve.B_min_gauss", "curve.B_max_gauss", "curve.B_step_gauss",
      "fit.unitarized",
  };
  return keys;
}

// Shared state for one subcommand invocation: the loaded config, the
// resolved constants, and the settings record that goes into every
// output header.
struct Context {
  KeyValueConfig config;
  PhysicalConstants pc = PhysicalConstants::li6();
  std::map<std::string, std::string> record;

  void load_config(const std::string& path) {
    if (path.empty()) return;
    config = KeyValueConfig::load_file(path);
    for (const auto& [key, value] : config.entries())
      if (!known_config_keys().count(key))
        throw ConfigError("unknown config key '" + key + "'");
    pc = constants_from_config(config);
  }

  void record_constants() {
    record["constants.hbar_J_s"] = fmt(pc.hbar);
    record["constants.kB_J_per_K"] = fmt(pc.kB);
    record["constants.m_kg"] = fmt(pc.m);
    record["constants.a0_m"] = fmt(pc.a0);
  }

  // flag > config > fallback; no fallback means required.
  double number(const CLI::Option* opt, double flag_value, const std::string& key,
                std::optional<double> fallback, const std::string& what) {
    double v;
    if (opt->count() > 0)
      v = flag_value;
    else if (config.has(key))
      v = config.get_double(key, 0.0);
    else if (fallback)
      v = *fallback;
    else
      throw UsageError("missing required setting: " + what + " (config key " + key + ")");
    record[key] = fmt(v);
    return v;
  }

  std::string text(const CLI::Option* opt, const std::string& flag_value, const std::string& key,
                   std::optional<std::string> fallback, const std::string& what) {
    std::string v;
    if (opt->count() > 0)
      v = flag_value;
    else if (auto c = config.get(key))
      v = *c;
    else if (fallback)
      v = *fallback;
    else
      throw UsageError("missing required setting: " + what + " (config key " + key + ")");
    record[key] = v;
    return v;
  }

  bool flag(const CLI::Option* opt, bool flag_value, const std::string& key, bool fallback) {
    bool v;
    if (opt->count() > 0)
      v = flag_value;
    else
      v = config.get_bool(key, fallback);
    record[key] = v ? "true" : "false";
    return v;
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") {
      os_ = &std::cout;
    } else {
      file_.open(path);
      if (!file_) throw ParseError("cannot open output file '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

void write_header(std::ostream& os, const std::string& command,
                  const std::map<std::string, std::string>& record) {
  os << "# trigas " << command << "\n";
  for (const auto& [key, value] : record) os << "# " << key << " = " << value << "\n";
}

// Per-subcommand option bundle. Values only become meaningful once
// resolved through the Context (flag > config > default).
struct Flags {
  std::string config_path;
  std::string out = "-";
  std::string table;
  std::string data;
  std::string trap_kind;
  double kappa_inv_a0 = 0, eta = 0, T_nK = 0, B_gauss = 0;
  double B_min = 0, B_max = 0, B_step = 0;
  double nu_x = 0, nu_y = 0, nu_z = 0, unc_x = 0, unc_y = 0, unc_z = 0;
  double Gamma = 0, L3_cm6 = 0, N0 = 0, t_max = 0, noise = 0, N_atoms = 0;
  int n_max = 2, samples = 0;
  std::uint64_t seed = 1;
  bool anti_evap = false, unitarized = false;

  CLI::Option* o_config = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_table = nullptr;
  CLI::Option* o_data = nullptr;
  CLI::Option* o_trap = nullptr;
  CLI::Option* o_kappa = nullptr;
  CLI::Option* o_eta = nullptr;
  CLI::Option* o_T = nullptr;
  CLI::Option* o_B = nullptr;
  CLI::Option* o_B_min = nullptr;
  CLI::Option* o_B_max = nullptr;
  CLI::Option* o_B_step = nullptr;
  CLI::Option* o_nu_x = nullptr;
  CLI::Option* o_nu_y = nullptr;
  CLI::Option* o_nu_z = nullptr;
  CLI::Option* o_unc_x = nullptr;
  CLI::Option* o_unc_y = nullptr;
  CLI::Option* o_unc_z = nullptr;
  CLI::Option* o_Gamma = nullptr;
  CLI::Option* o_L3 = nullptr;
  CLI::Option* o_N0 = nullptr;
  CLI::Option* o_t_max = nullptr;
  CLI::Option* o_noise = nullptr;
  CLI::Option* o_N_atoms = nullptr;
  CLI::Option* o_n_max = nullptr;
  CLI::Option* o_samples = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_anti = nullptr;
  CLI::Option* o_unitarized = nullptr;
};

void add_common(CLI::App* cmd, Flags& f) {
  f.o_config = cmd->add_option("--config", f.config_path, "Flat key = value config file");
  f.o_out = cmd->add_option("--out", f.out, "Output file, '-' for stdout");
}

void add_trap_options(CLI::App* cmd, Flags& f) {
  f.o_trap = cmd->add_option("--trap", f.trap_kind, "Trap geometry: A, B, or custom")
                 ->check(CLI::IsMember({"A", "B", "custom"}));
  f.o_nu_x = cmd->add_option("--nu-x-Hz", f.nu_x, "Custom trap x frequency (Hz)");
  f.o_nu_y = cmd->add_option("--nu-y-Hz", f.nu_y, "Custom trap y frequency (Hz)");
  f.o_nu_z = cmd->add_option("--nu-z-Hz", f.nu_z, "Custom trap z frequency (Hz)");
  f.o_unc_x = cmd->add_option("--frac-unc-x", f.unc_x, "Custom trap x fractional uncertainty");
  f.o_unc_y = cmd->add_option("--frac-unc-y", f.unc_y, "Custom trap y fractional uncertainty");
  f.o_unc_z = cmd->add_option("--frac-unc-z", f.unc_z, "Custom trap z fractional uncertainty");
}

TrapConfig resolve_trap(Context& ctx, const Flags& f) {
  const std::string kind = ctx.text(f.o_trap, f.trap_kind, "trap.kind", std::nullopt, "--trap");
  if (kind == "A") return TrapConfig::trap_a();
  if (kind == "B") return TrapConfig::trap_b();
  if (kind != "custom") throw UsageError("trap kind must be A, B or custom, got '" + kind + "'");
  TrapFrequencies nu{ctx.number(f.o_nu_x, f.nu_x, "trap.nu_x_Hz", std::nullopt, "--nu-x-Hz"),
                     ctx.number(f.o_nu_y, f.nu_y, "trap.nu_y_Hz", std::nullopt, "--nu-y-Hz"),
                     ctx.number(f.o_nu_z, f.nu_z, "trap.nu_z_Hz", std::nullopt, "--nu-z-Hz")};
  std::array<double, 3> unc{ctx.number(f.o_unc_x, f.unc_x, "trap.frac_unc_x", 0.0, "--frac-unc-x"),
                            ctx.number(f.o_unc_y, f.unc_y, "trap.frac_unc_y", 0.0, "--frac-unc-y"),
                            ctx.number(f.o_unc_z, f.unc_z, "trap.frac_unc_z", 0.0, "--frac-unc-z")};
  return TrapConfig::custom(nu, unc);
}

EfimovParams resolve_efimov(Context& ctx, const Flags& f, bool need_eta = true) {
  const double kappa = ctx.number(f.o_kappa, f.kappa_inv_a0, "efimov.kappa_star_inv_a0",
                                  std::nullopt, "--kappa-star-inv-a0");
  const double eta = need_eta ? ctx.number(f.o_eta, f.eta, "efimov.eta_star", std::nullopt,
                                           "--eta-star")
                              : ctx.number(f.o_eta, f.eta, "efimov.eta_star", 0.0, "--eta-star");
  return EfimovParams::from_inv_a0(kappa, eta, ctx.pc);
}

double resolve_temperature(Context& ctx, const Flags& f) {
  const double t_nk = ctx.number(f.o_T, f.T_nK, "gas.T_nK", std::nullopt, "--T-nK");
  return Quantity(t_nk, "nK").si();
}

// Input data files have no config-file equivalent; the flag is mandatory.
std::string require_flag(Context& ctx, const CLI::Option* opt, const std::string& value,
                         const std::string& what) {
  if (opt->count() == 0) throw UsageError("missing required flag: " + what);
  ctx.record[what.substr(2)] = value;
  return value;
}

void write_result_file(std::ostream& os, const FitResult& result,
                       const std::vector<std::pair<std::string, std::pair<double, double>>>& rows) {
  os << "parameter,value,sigma\n";
  for (const auto& [name, vs] : rows)
    os << name << "," << fmt(vs.first) << "," << fmt(vs.second) << "\n";
  os << "chi2," << fmt(result.chi2) << ",\n";
  os << "dof," << result.dof << ",\n";
  os << "converged," << (result.converged ? 1 : 0) << ",\n";
}

// --- subcommand bodies -----------------------------------------------

int cmd_spectrum(Context& ctx, const Flags& f) {
  const EfimovParams params = resolve_efimov(ctx, f);
  int n_max = f.n_max;
  if (f.o_n_max->count() == 0)
    n_max = static_cast<int>(ctx.config.get_double("spectrum.n_max", n_max));
  if (n_max < 0) throw DomainError("spectrum: --n-max must be >= 0");
  ctx.record["spectrum.n_max"] = std::to_string(n_max);
  ctx.record_constants();

  const UniversalConstants u;
  Output out(f.out);
  write_header(out.stream(), "spectrum", ctx.record);
  out.stream() << "n,E_over_h_Hz,a_n_minus_a0,gamma_rad_per_s,lifetime_s\n";
  for (int n = 0; n <= n_max; ++n) {
    const double E = binding_energy_at_unitarity(params, n, u, ctx.pc);
    const double a_n = resonance_scattering_length(params, u, n);
    const TrimerWidth width = trimer_width(E, params, u, ctx.pc);
    out.stream() << n << "," << fmt(E / ctx.pc.h) << "," << fmt(a_n / ctx.pc.a0) << ","
                 << fmt(width.gamma) << "," << fmt(width.lifetime) << "\n";
  }
  return kExitOk;
}

int cmd_l3_curve(Context& ctx, const Flags& f) {
  const std::string table_path = ctx.text(f.o_table, f.table, "table", std::nullopt, "--table");
  const ScatteringTable table = ScatteringTable::load_file(table_path);
  const EfimovParams params = resolve_efimov(ctx, f);
  const double T = resolve_temperature(ctx, f);
  const double b_min =
      ctx.number(f.o_B_min, f.B_min, "curve.B_min_gauss", table.min_field(), "--B-min-gauss");
  const double b_max =
      ctx.number(f.o_B_max, f.B_max, "curve.B_max_gauss", table.max_field(), "--B-max-gauss");
  const double b_step = ctx.number(f.o_B_step, f.B_step, "curve.B_step_gauss", 1.0,
                                   "--B-step-gauss");
  if (!(b_step > 0.0)) throw DomainError("l3-curve: --B-step-gauss must be positive");
  if (!(b_max >= b_min)) throw DomainError("l3-curve: --B-max-gauss must be >= --B-min-gauss");
  ctx.record_constants();

  std::vector<double> grid;
  for (double b = b_min; b <= b_max + 1e-9 * b_step; b += b_step) grid.push_back(std::min(b, b_max));

  const UniversalConstants u;
  const auto curve = l3_model_curve(table, params, u, ctx.pc, T, grid);
  Output out(f.out);
  write_header(out.stream(), "l3-curve", ctx.record);
  out.stream() << "B_gauss,L3_zeroT_cm6_per_s,L3_unitarized_cm6_per_s\n";
  for (const L3CurvePoint& p : curve)
    out.stream() << fmt(p.B_gauss) << "," << fmt(convert(Quantity(p.L3_zero_T, "m6/s"), "cm6/s").value)
                 << "," << fmt(convert(Quantity(p.L3_unitarized, "m6/s"), "cm6/s").value) << "\n";
  return kExitOk;
}

int cmd_scan_resonances(Context& ctx, const Flags& f) {
  const std::string table_path = ctx.text(f.o_table, f.table, "table", std::nullopt, "--table");
  const ScatteringTable table = ScatteringTable::load_file(table_path);
  const EfimovParams params = resolve_efimov(ctx, f, /*need_eta=*/false);
  ctx.record_constants();

  const UniversalConstants u;
  const auto crossings = scan_resonance_fields(table, params, u, ctx.pc);
  Output out(f.out);
  write_header(out.stream(), "scan-resonances", ctx.record);
  out.stream() << "B_gauss,n_branch\n";
  for (const ResonanceCrossing& c : crossings)
    out.stream() << fmt(c.B_gauss) << "," << c.n_branch << "\n";
  return kExitOk;
}

std::vector<double> simulate_grid(double t_max, int samples) {
  if (samples < 2) throw DomainError("simulate: --samples must be >= 2");
  if (!(t_max > 0.0)) throw DomainError("simulate: --t-max-s must be positive");
  std::vector<double> grid(samples);
  for (int i = 0; i < samples; ++i) grid[i] = t_max * i / (samples - 1);
  return grid;
}

int cmd_simulate(Context& ctx, const Flags& f) {
  const TrapConfig trap = resolve_trap(ctx, f);
  const double B = ctx.number(f.o_B, f.B_gauss, "gas.B_gauss", std::nullopt, "--B-gauss");
  const double T0 = resolve_temperature(ctx, f);
  const double N0 = ctx.number(f.o_N0, f.N0, "gas.N", std::nullopt, "--N0");
  const double Gamma = ctx.number(f.o_Gamma, f.Gamma, "decay.Gamma_per_s", 0.0, "--Gamma-per-s");
  const double L3_cm6 =
      ctx.number(f.o_L3, f.L3_cm6, "decay.L3_cm6_per_s", std::nullopt, "--L3-cm6-per-s");
  const bool anti = ctx.flag(f.o_anti, f.anti_evap, "decay.anti_evaporation", false);
  const double t_max = ctx.number(f.o_t_max, f.t_max, "sim.t_max_s", std::nullopt, "--t-max-s");
  const int samples = static_cast<int>(
      ctx.number(f.o_samples, f.samples, "sim.samples", 30.0, "--samples"));
  const double noise = ctx.number(f.o_noise, f.noise, "sim.noise_frac", 0.0, "--noise-frac");
  std::uint64_t seed = f.seed;
  if (f.o_seed->count() == 0)
    seed = static_cast<std::uint64_t>(ctx.config.get_double("sim.seed", 1.0));
  ctx.record["sim.seed"] = std::to_string(seed);
  ctx.record_constants();

  const DecayModel model{Gamma, Quantity(L3_cm6, "cm6/s").si(), trap, B, anti};
  const auto grid = simulate_grid(t_max, samples);
  const DecaySeries series = synthesize(model, N0, T0, grid, noise, seed, ctx.pc);

  Output out(f.out);
  write_header(out.stream(), "simulate", ctx.record);
  out.stream() << "t_s,N,T_K,sigma_N\n";
  for (const DecaySample& s : series.samples)
    out.stream() << fmt(s.t) << "," << fmt(s.N) << "," << fmt(s.T) << "," << fmt(s.sigma_N)
                 << "\n";
  return kExitOk;
}

int cmd_fit_decay(Context& ctx, const Flags& f) {
  const std::string data_path = require_flag(ctx, f.o_data, f.data, "--data");
  const TrapConfig trap = resolve_trap(ctx, f);
  const double B = ctx.number(f.o_B, f.B_gauss, "gas.B_gauss", std::nullopt, "--B-gauss");
  const double Gamma =
      ctx.number(f.o_Gamma, f.Gamma, "decay.Gamma_per_s", std::nullopt, "--Gamma-per-s");
  ctx.record_constants();

  const DecaySeries series = DecaySeries::load_file(data_path);
  const FitResult result = fit_decay(series, trap, B, Gamma, ctx.pc);

  Output out(f.out);
  write_header(out.stream(), "fit-decay", ctx.record);
  const double to_cm6 = 1.0 / Quantity(1.0, "cm6/s").si();
  write_result_file(out.stream(), result,
                    {{"L3_cm6_per_s",
                      {result.params.at("L3") * to_cm6, result.uncertainties.at("L3") * to_cm6}},
                     {"N0", {result.params.at("N0"), result.uncertainties.at("N0")}},
                     {"T_K", {result.params.at("T"), result.uncertainties.at("T")}}});
  return kExitOk;
}

int cmd_fit_efimov(Context& ctx, const Flags& f) {
  const std::string data_path = require_flag(ctx, f.o_data, f.data, "--data");
  const std::string table_path = ctx.text(f.o_table, f.table, "table", std::nullopt, "--table");
  const ScatteringTable table = ScatteringTable::load_file(table_path);

  EfimovFitOptions options;
  options.unitarized = ctx.flag(f.o_unitarized, f.unitarized, "fit.unitarized", false);
  if (options.unitarized) options.T_kelvin = resolve_temperature(ctx, f);
  ctx.record_constants();

  const auto points = load_l3_points_file(data_path);
  const UniversalConstants u;
  const FitResult result = fit_efimov(points, table, u, ctx.pc, options);

  Output out(f.out);
  write_header(out.stream(), "fit-efimov", ctx.record);
  const double kappa = result.params.at("kappa_star") * ctx.pc.a0;  // 1/m -> 1/a0
  const double sigma_kappa = result.uncertainties.at("kappa_star") * ctx.pc.a0;
  write_result_file(out.stream(), result,
                    {{"kappa_star_inv_a0", {kappa, sigma_kappa}},
                     {"eta_star",
                      {result.params.at("eta_star"), result.uncertainties.at("eta_star")}}});
  return kExitOk;
}

int cmd_degeneracy(Context& ctx, const Flags& f) {
  const TrapConfig trap = resolve_trap(ctx, f);
  const double B = ctx.number(f.o_B, f.B_gauss, "gas.B_gauss", std::nullopt, "--B-gauss");
  const double N = ctx.number(f.o_N_atoms, f.N_atoms, "gas.N", std::nullopt, "--N");
  const double T = resolve_temperature(ctx, f);
  ctx.record_constants();

  const double nubar = mean_frequency(trap.frequencies(B));
  const double t_fermi = fermi_temperature(N, nubar, ctx.pc);

  Output out(f.out);
  write_header(out.stream(), "degeneracy", ctx.record);
  out.stream() << "parameter,value\n";
  out.stream() << "N," << fmt(N) << "\n";
  out.stream() << "nubar_Hz," << fmt(nubar) << "\n";
  out.stream() << "T_F_nK," << fmt(convert(Quantity(t_fermi, "K"), "nK").value) << "\n";
  out.stream() << "T_over_TF," << fmt(T / t_fermi) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"trigas: three-body recombination toolkit for a three-state Fermi gas"};
  app.require_subcommand(1);

  Flags spectrum_f, curve_f, scan_f, sim_f, fitd_f, fite_f, degen_f;

  auto* spectrum = app.add_subcommand(
      "spectrum", "Efimov trimer spectrum: binding energies, threshold crossings, widths");
  add_common(spectrum, spectrum_f);
  spectrum_f.o_kappa = spectrum->add_option("--kappa-star-inv-a0", spectrum_f.kappa_inv_a0,
                                            "Three-body parameter kappa* (1/a0)");
  spectrum_f.o_eta = spectrum->add_option("--eta-star", spectrum_f.eta,
                                          "Width parameter eta* (dimensionless)");
  spectrum_f.o_n_max =
      spectrum->add_option("--n-max", spectrum_f.n_max, "Highest trimer index n (dimensionless)");

  auto* curve = app.add_subcommand("l3-curve",
                                   "Zero-T and unitarized L3(B) over a field grid");
  add_common(curve, curve_f);
  curve_f.o_table = curve->add_option("--table", curve_f.table, "Scattering-length table CSV");
  curve_f.o_kappa = curve->add_option("--kappa-star-inv-a0", curve_f.kappa_inv_a0,
                                      "Three-body parameter kappa* (1/a0)");
  curve_f.o_eta = curve->add_option("--eta-star", curve_f.eta, "Width parameter eta*");
  curve_f.o_T = curve->add_option("--T-nK", curve_f.T_nK, "Gas temperature (nK)");
  curve_f.o_B_min = curve->add_option("--B-min-gauss", curve_f.B_min, "Grid start (G)");
  curve_f.o_B_max = curve->add_option("--B-max-gauss", curve_f.B_max, "Grid end (G)");
  curve_f.o_B_step = curve->add_option("--B-step-gauss", curve_f.B_step, "Grid step (G)");

  auto* scan = app.add_subcommand("scan-resonances",
                                  "Fields where a trimer crosses threshold (effective-a model)");
  add_common(scan, scan_f);
  scan_f.o_table = scan->add_option("--table", scan_f.table, "Scattering-length table CSV");
  scan_f.o_kappa = scan->add_option("--kappa-star-inv-a0", scan_f.kappa_inv_a0,
                                    "Three-body parameter kappa* (1/a0)");
  scan_f.o_eta = scan->add_option("--eta-star", scan_f.eta, "Width parameter eta* (unused)");

  auto* sim = app.add_subcommand("simulate", "Generate a decay series from the loss model");
  add_common(sim, sim_f);
  add_trap_options(sim, sim_f);
  sim_f.o_B = sim->add_option("--B-gauss", sim_f.B_gauss, "Magnetic field (G)");
  sim_f.o_T = sim->add_option("--T-nK", sim_f.T_nK, "Initial temperature (nK)");
  sim_f.o_N0 = sim->add_option("--N0", sim_f.N0, "Initial atoms per spin state (count)");
  sim_f.o_Gamma = sim->add_option("--Gamma-per-s", sim_f.Gamma, "One-body loss rate (1/s)");
  sim_f.o_L3 = sim->add_option("--L3-cm6-per-s", sim_f.L3_cm6, "Rate constant L3 (cm^6/s)");
  sim_f.o_anti = sim->add_flag("--anti-evaporation", sim_f.anti_evap,
                               "Include recombination heating");
  sim_f.o_t_max = sim->add_option("--t-max-s", sim_f.t_max, "Hold time span (s)");
  sim_f.o_samples = sim->add_option("--samples", sim_f.samples, "Number of samples (count)");
  sim_f.o_noise = sim->add_option("--noise-frac", sim_f.noise,
                                  "Fractional Gaussian number noise (dimensionless)");
  sim_f.o_seed = sim->add_option("--seed", sim_f.seed, "RNG seed (integer)");

  auto* fitd = app.add_subcommand("fit-decay", "Extract (L3, N0, T) from one decay series");
  add_common(fitd, fitd_f);
  add_trap_options(fitd, fitd_f);
  fitd_f.o_data = fitd->add_option("--data", fitd_f.data, "Decay series CSV (t_s,N,T_K,sigma_N)");
  fitd_f.o_B = fitd->add_option("--B-gauss", fitd_f.B_gauss, "Magnetic field (G)");
  fitd_f.o_Gamma = fitd->add_option("--Gamma-per-s", fitd_f.Gamma,
                                    "Fixed one-body loss rate (1/s)");

  auto* fite = app.add_subcommand("fit-efimov",
                                  "Extract (kappa*, eta*) from L3(B) data");
  add_common(fite, fite_f);
  fite_f.o_data = fite->add_option("--data", fite_f.data,
                                   "L3 data CSV (B_gauss,L3_cm6_per_s,sigma_L3)");
  fite_f.o_table = fite->add_option("--table", fite_f.table, "Scattering-length table CSV");
  fite_f.o_unitarized = fite->add_flag("--unitarized", fite_f.unitarized,
                                       "Fit the unitarity-saturated curve");
  fite_f.o_T = fite->add_option("--T-nK", fite_f.T_nK,
                                "Temperature for the saturation value (nK)");

  auto* degen = app.add_subcommand("degeneracy", "Fermi temperature and degeneracy of the gas");
  add_common(degen, degen_f);
  add_trap_options(degen, degen_f);
  degen_f.o_B = degen->add_option("--B-gauss", degen_f.B_gauss, "Magnetic field (G)");
  degen_f.o_N_atoms = degen->add_option("--N", degen_f.N_atoms, "Atoms per spin state (count)");
  degen_f.o_T = degen->add_option("--T-nK", degen_f.T_nK, "Gas temperature (nK)");

  try {
    // CLI11's vector overload consumes arguments back to front.
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    auto with_context = [&](const Flags& f, auto&& body) {
      Context ctx;
      ctx.load_config(f.config_path);
      return body(ctx);
    };
    if (spectrum->parsed())
      return with_context(spectrum_f, [&](Context& c) { return cmd_spectrum(c, spectrum_f); });
    if (curve->parsed())
      return with_context(curve_f, [&](Context& c) { return cmd_l3_curve(c, curve_f); });
    if (scan->parsed())
      return with_context(scan_f, [&](Context& c) { return cmd_scan_resonances(c, scan_f); });
    if (sim->parsed())
      return with_context(sim_f, [&](Context& c) { return cmd_simulate(c, sim_f); });
    if (fitd->parsed())
      return with_context(fitd_f, [&](Context& c) { return cmd_fit_decay(c, fitd_f); });
    if (fite->parsed())
      return with_context(fite_f, [&](Context& c) { return cmd_fit_efimov(c, fite_f); });
    if (degen->parsed())
      return with_context(degen_f, [&](Context& c) { return cmd_degeneracy(c, degen_f); });
    std::cerr << "error: usage: no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IntegrationError& e) {
    std::cerr << "error: numerical: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const SingularModelError& e) {
    std::cerr << "error: numerical: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "error: data: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace trigas::cli
