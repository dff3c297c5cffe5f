#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "test_helpers.hpp"
#include "trigas/recombination.hpp"

using namespace trigas;

namespace {
const PhysicalConstants pc = PhysicalConstants::li6();
const UniversalConstants uc;

EfimovParams paper_params() { return EfimovParams::from_inv_a0(6.9e-3, 0.016, pc); }
}  // namespace

TEST_CASE("equal-a rate at the first excited resonance matches the frozen oracle") {
  const EfimovParams p = paper_params();
  const double a1 = resonance_scattering_length(p, uc, 1);
  const double L3 = l3_equal_a(a1, p, uc, pc);
  // Independently precomputed at high precision: at a = a_1^- the sine
  // vanishes and L3 = 16 pi^2 C sinh(2 eta)/sinh^2(eta) * hbar a^4/m.
  CHECK(rel_err(L3 * 1e12, 2.9107784201731345e-17) < 1e-9);  // cm^6/s
}

TEST_CASE("equal-a rate edge cases") {
  const EfimovParams p = paper_params();
  SUBCASE("positive or zero a is rejected") {
    CHECK_THROWS_AS(l3_equal_a(0.0, p, uc, pc), DomainError);
    CHECK_THROWS_AS(l3_equal_a(1e-7, p, uc, pc), DomainError);
  }
  SUBCASE("eta* = 0 off resonance gives exactly zero") {
    const EfimovParams stable = EfimovParams::from_inv_a0(6.9e-3, 0.0, pc);
    CHECK(l3_equal_a(-5000.0 * pc.a0, stable, uc, pc) == 0.0);
  }
  SUBCASE("eta* = 0 exactly on resonance is singular") {
    // Hunt a (|a|, kappa*) pair whose product D*|a|*kappa* rounds to 1.0
    // exactly, making the log (and the sine) vanish bitwise.
    double abs_a = 1e-7;
    double kappa = 1.0 / (uc.D * abs_a);
    bool found = false;
    for (int i = 0; i < 1000 && !found; ++i) {
      const double prod = uc.D * abs_a * kappa;
      if (prod == 1.0) {
        found = true;
        break;
      }
      kappa = std::nextafter(kappa, prod < 1.0 ? 2.0 * kappa : 0.0);
    }
    REQUIRE(found);
    const EfimovParams stable(kappa, 0.0);
    CHECK_THROWS_AS(l3_equal_a(-abs_a, stable, uc, pc), SingularModelError);
  }
}

TEST_CASE("equal-a rate is log-periodic and bounded") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> loga(2.0, 5.0);    // |a|/a0 in [100, 1e5]
  std::uniform_real_distribution<double> logk(-4.0, -1.0);  // kappa* a0 in [1e-4, 1e-1]
  std::uniform_real_distribution<double> logeta(-3.0, std::log10(0.3));
  const double lambda = std::exp(std::numbers::pi / uc.s0);
  const double scale4 = std::exp(4.0 * std::numbers::pi / uc.s0);

  for (int trial = 0; trial < 200; ++trial) {
    const double a = -std::pow(10.0, loga(rng)) * pc.a0;
    const double eta = std::pow(10.0, logeta(rng));
    const EfimovParams p = EfimovParams::from_inv_a0(std::pow(10.0, logk(rng)), eta, pc);

    const double l3 = l3_equal_a(a, p, uc, pc);

    // Log-periodicity: a -> e^{pi/s0} a multiplies the rate by e^{4 pi/s0}.
    CHECK(rel_err(l3_equal_a(lambda * a, p, uc, pc), scale4 * l3) < 1e-10);

    // Bound: sin^2 >= 0 puts the rate below the resonance envelope.
    const double sh = std::sinh(eta);
    const double envelope = 16.0 * std::numbers::pi * std::numbers::pi * uc.C *
                            std::sinh(2.0 * eta) / (sh * sh) * pc.hbar * a * a * a * a / pc.m;
    CHECK(l3 <= envelope * (1.0 + 1e-12));
    CHECK(l3 >= 0.0);
  }
}

TEST_CASE("unitarity limit") {
  SUBCASE("paper values at 30 nK and 180 nK (1 significant figure)") {
    CHECK(rel_err(l3_max(30e-9, pc) * 1e12, 8e-18) < 0.15);
    CHECK(rel_err(l3_max(180e-9, pc) * 1e12, 2e-19) < 0.15);
    // Frozen independent evaluations.
    CHECK(rel_err(l3_max(30e-9, pc) * 1e12, 7.825343352e-18) < 1e-9);
    CHECK(rel_err(l3_max(180e-9, pc) * 1e12, 2.173706487e-19) < 1e-9);
  }
  SUBCASE("inverse-square temperature scaling") {
    CHECK(rel_err(l3_max(60e-9, pc), l3_max(30e-9, pc) / 4.0) < 1e-12);
  }
  SUBCASE("log-log slope is -2") {
    const double t1 = 20e-9, t2 = 500e-9;
    const double slope = (std::log(l3_max(t2, pc)) - std::log(l3_max(t1, pc))) /
                         (std::log(t2) - std::log(t1));
    CHECK(std::abs(slope + 2.0) < 1e-9);
  }
  SUBCASE("non-positive temperature") {
    CHECK_THROWS_AS(l3_max(0.0, pc), DomainError);
    CHECK_THROWS_AS(l3_max(-1e-9, pc), DomainError);
  }
}

TEST_CASE("unitarized combination") {
  SUBCASE("harmonic mean of equals is half") {
    CHECK(l3_unitarized(4e-20, 4e-20) == doctest::Approx(2e-20));
  }
  SUBCASE("dominated by the smaller rate") {
    CHECK(rel_err(l3_unitarized(1e-22, 1e-18), 9.999e-23) < 1e-4);
  }
  SUBCASE("symmetric and below both arguments") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> mag(-24.0, -16.0);
    for (int trial = 0; trial < 100; ++trial) {
      const double x = std::pow(10.0, mag(rng));
      const double y = std::pow(10.0, mag(rng));
      const double u = l3_unitarized(x, y);
      CHECK(u == l3_unitarized(y, x));
      CHECK(u < x);
      CHECK(u < y);
    }
  }
  SUBCASE("non-positive inputs") {
    CHECK_THROWS_AS(l3_unitarized(0.0, 1e-18), DomainError);
    CHECK_THROWS_AS(l3_unitarized(1e-18, -1e-20), DomainError);
  }
}

TEST_CASE("threshold temperature") {
  SUBCASE("paper anchor points") {
    CHECK(rel_err(threshold_temperature(12250 * pc.a0, pc), 30.32203648e-9) < 1e-9);
    CHECK(rel_err(threshold_temperature(5000 * pc.a0, pc), 182.008024e-9) < 1e-9);
  }
  SUBCASE("inverse-square scaling in a") {
    const double t = threshold_temperature(6000 * pc.a0, pc);
    CHECK(rel_err(threshold_temperature(12000 * pc.a0, pc), t / 4.0) < 1e-12);
  }
  SUBCASE("sign of a does not matter") {
    CHECK(threshold_temperature(-5000 * pc.a0, pc) == threshold_temperature(5000 * pc.a0, pc));
  }
  SUBCASE("log-log slope is -2") {
    const double a1 = 2e-7, a2 = 9e-6;
    const double slope = (std::log(threshold_temperature(a2, pc)) -
                          std::log(threshold_temperature(a1, pc))) /
                         (std::log(a2) - std::log(a1));
    CHECK(std::abs(slope + 2.0) < 1e-9);
  }
  SUBCASE("a = 0 is rejected") { CHECK_THROWS_AS(threshold_temperature(0.0, pc), DomainError); }
}

TEST_CASE("effective scattering length") {
  SUBCASE("geometric mean of the 895 G triple") {
    const double a = effective_a(ScatteringTriple{-8584, -5702, -2893, 895});
    CHECK(rel_err(a, -5212.208561) < 1e-9);  // independently computed cube root
  }
  SUBCASE("equal triple maps to itself") {
    CHECK(effective_a(ScatteringTriple{-2140, -2140, -2140, 1500}) == doctest::Approx(-2140));
  }
  SUBCASE("permutation symmetry") {
    const double a1 = effective_a(ScatteringTriple{-8584, -5702, -2893, 895});
    const double a2 = effective_a(ScatteringTriple{-2893, -8584, -5702, 895});
    const double a3 = effective_a(ScatteringTriple{-5702, -2893, -8584, 895});
    CHECK(a1 == doctest::Approx(a2).epsilon(1e-14));
    CHECK(a1 == doctest::Approx(a3).epsilon(1e-14));
  }
  SUBCASE("any non-negative length is rejected") {
    CHECK_THROWS_AS(effective_a(ScatteringTriple{8584, -5702, -2893, 895}), DomainError);
    CHECK_THROWS_AS(effective_a(ScatteringTriple{-8584, 0.0, -2893, 895}), DomainError);
  }
}

TEST_CASE("model curve over a field grid") {
  const ScatteringTable table = ScatteringTable::load_file(data_path("li6_sample_a_table.csv"));
  const EfimovParams p = paper_params();

  SUBCASE("single point at 895 G: finite peak-region values, unitarized below the cap") {
    const std::vector<double> grid = {895.0};
    const auto curve = l3_model_curve(table, p, uc, pc, 30e-9, grid);
    REQUIRE(curve.size() == 1);
    CHECK(curve[0].B_gauss == 895.0);
    CHECK(curve[0].L3_zero_T > 0.0);
    CHECK(std::isfinite(curve[0].L3_zero_T));
    CHECK(curve[0].L3_unitarized <= l3_max(30e-9, pc) / 3.0);
    CHECK(curve[0].L3_unitarized < curve[0].L3_zero_T);
  }
  SUBCASE("eta* = 0 grid is identically zero") {
    const EfimovParams stable = EfimovParams::from_inv_a0(6.9e-3, 0.0, pc);
    const std::vector<double> grid = {880, 920, 1000, 1200};
    const auto curve = l3_model_curve(table, stable, uc, pc, 30e-9, grid);
    for (const auto& pt : curve) {
      CHECK(pt.L3_zero_T == 0.0);
      CHECK(pt.L3_unitarized == 0.0);
    }
  }
  SUBCASE("a grid point where a_eff equals a_1^- reproduces the resonance peak") {
    // Build a two-row table whose (equal) triple is exactly a_1^-.
    const double a1_a0 = resonance_scattering_length(p, uc, 1) / pc.a0;
    const ScatteringTable flat = ScatteringTable::from_rows(
        {ScatteringRow{800, a1_a0, a1_a0, a1_a0}, ScatteringRow{1000, a1_a0, a1_a0, a1_a0}});
    const std::vector<double> grid = {900.0};
    const auto curve = l3_model_curve(flat, p, uc, pc, 30e-9, grid);
    CHECK(rel_err(curve[0].L3_zero_T * 1e12, 2.9107784201731345e-17) < 1e-6);
  }
  SUBCASE("out-of-range grid point propagates a RangeError") {
    const std::vector<double> grid = {100.0};
    CHECK_THROWS_AS(l3_model_curve(table, p, uc, pc, 30e-9, grid), RangeError);
  }
  SUBCASE("non-negative triple propagates a DomainError naming the field") {
    const ScatteringTable bad = ScatteringTable::from_rows(
        {ScatteringRow{800, -100, -100, -100}, ScatteringRow{1000, 100, -100, -100}});
    const std::vector<double> grid = {1000.0};
    CHECK_THROWS_WITH_AS(l3_model_curve(bad, p, uc, pc, 30e-9, grid),
                         doctest::Contains("1000"), DomainError);
  }
}

TEST_CASE("resonance-field scan") {
  const ScatteringTable table = ScatteringTable::load_file(data_path("li6_sample_a_table.csv"));

  SUBCASE("sample table puts the n = 1 crossing within a few G of 895 G") {
    const EfimovParams p = paper_params();
    const auto crossings = scan_resonance_fields(table, p, uc, pc);
    REQUIRE(crossings.size() == 1);
    CHECK(crossings[0].n_branch == 1);
    CHECK(std::abs(crossings[0].B_gauss - 895.0) < 10.0);
    // Frozen from an independent root find on the same table: 902.91 G.
    CHECK(std::abs(crossings[0].B_gauss - 902.91) < 0.05);
  }
  SUBCASE("kappa* -> kappa*/lambda moves the crossing to 22.7x larger |a_eff|") {
    const double lambda = std::exp(std::numbers::pi / uc.s0);
    const EfimovParams p = paper_params();
    const EfimovParams shifted(p.kappa_star / lambda, p.eta_star);
    const auto c1 = scan_resonance_fields(table, p, uc, pc);
    const auto c2 = scan_resonance_fields(table, shifted, uc, pc);
    REQUIRE(c1.size() == 1);
    REQUIRE(c2.size() == 1);
    // Same field, one branch lower: D|a_eff|kappa* is unchanged when the
    // branch index compensates the kappa* shift.
    CHECK(std::abs(c1[0].B_gauss - c2[0].B_gauss) < 0.02);
    CHECK(c2[0].n_branch == c1[0].n_branch - 1);
  }
  SUBCASE("no crossing when |a_eff| stays below |a_0^-| everywhere") {
    // kappa* so small that even the n = 0 crossing needs |a_eff| far above
    // anything in the table.
    const EfimovParams tiny = EfimovParams::from_inv_a0(1e-6, 0.016, pc);
    CHECK(scan_resonance_fields(table, tiny, uc, pc).empty());
  }
}
