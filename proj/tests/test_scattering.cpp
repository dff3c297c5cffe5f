#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "test_helpers.hpp"
#include "trigas/scattering.hpp"

using namespace trigas;

namespace {

ScatteringTable table_from(const std::string& csv) {
  std::istringstream in(csv);
  return ScatteringTable::load(in);
}

const char* kSmallTable =
    "B_gauss,a12_a0,a23_a0,a13_a0\n"
    "890,-9000,-6000,-3000\n"
    "895,-8584,-5702,-2893\n"
    "900,-8100,-5500,-2850\n";

}  // namespace

TEST_CASE("load ingests a well-formed table") {
  const ScatteringTable t = table_from(kSmallTable);
  CHECK(t.rows().size() == 3);
  CHECK(t.min_field() == 890);
  CHECK(t.max_field() == 900);
}

TEST_CASE("load rejects malformed input") {
  SUBCASE("decreasing B names the offending row") {
    const char* csv =
        "B_gauss,a12_a0,a23_a0,a13_a0\n"
        "890,-9000,-6000,-3000\n"
        "895,-8584,-5702,-2893\n"
        "894,-8100,-5500,-2850\n";
    CHECK_THROWS_WITH_AS(table_from(csv),
                         doctest::Contains("row 3"), ParseError);
  }
  SUBCASE("non-finite entry") {
    const char* csv =
        "B_gauss,a12_a0,a23_a0,a13_a0\n"
        "890,-9000,inf,-3000\n"
        "895,-8584,-5702,-2893\n";
    CHECK_THROWS_AS(table_from(csv), ParseError);
  }
  SUBCASE("wrong field count") {
    CHECK_THROWS_AS(table_from("B_gauss,a12_a0,a23_a0,a13_a0\n890,-9000,-6000\n895,-1,-1,-1\n"),
                    ParseError);
  }
  SUBCASE("garbage number") {
    CHECK_THROWS_AS(table_from("B_gauss,a12_a0,a23_a0,a13_a0\n890,-9000,abc,-1\n895,-1,-1,-1\n"),
                    ParseError);
  }
  SUBCASE("wrong header") {
    CHECK_THROWS_AS(table_from("B,a12,a23,a13\n890,-9000,-6000,-3000\n"), ParseError);
  }
  SUBCASE("fewer than two rows") {
    CHECK_THROWS_AS(table_from("B_gauss,a12_a0,a23_a0,a13_a0\n890,-9000,-6000,-3000\n"),
                    ParseError);
  }
  SUBCASE("empty input") { CHECK_THROWS_AS(table_from(""), ParseError); }
}

TEST_CASE("interpolation reproduces nodes exactly and blends linearly") {
  const ScatteringTable t = table_from(kSmallTable);

  SUBCASE("exact node") {
    const ScatteringTriple x = t.at(895);
    CHECK(x.a12_a0 == -8584);
    CHECK(x.a23_a0 == -5702);
    CHECK(x.a13_a0 == -2893);
  }
  SUBCASE("two-row midpoint") {
    const ScatteringTable two = table_from(
        "B_gauss,a12_a0,a23_a0,a13_a0\n"
        "1400,-2200,-2300,-2400\n"
        "1600,-2100,-2250,-2300\n");
    const ScatteringTriple mid = two.at(1500);
    CHECK(mid.a12_a0 == doctest::Approx(-2150));
    CHECK(mid.a23_a0 == doctest::Approx(-2275));
    CHECK(mid.a13_a0 == doctest::Approx(-2350));
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(t.at(889.99), RangeError);
    CHECK_THROWS_AS(t.at(900.01), RangeError);
  }
}

TEST_CASE("interpolation is bounded by neighboring nodes") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> da(-9000.0, -100.0);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ScatteringRow> rows;
    double b = 800.0;
    for (int i = 0; i < 8; ++i) {
      rows.push_back(ScatteringRow{b, da(rng), da(rng), da(rng)});
      b += 5.0 + 20.0 * w(rng);
    }
    const ScatteringTable t = ScatteringTable::from_rows(rows);
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
      const double q = rows[i].B_gauss + w(rng) * (rows[i + 1].B_gauss - rows[i].B_gauss);
      const ScatteringTriple x = t.at(q);
      auto within = [](double v, double y0, double y1) {
        return v >= std::min(y0, y1) - 1e-9 && v <= std::max(y0, y1) + 1e-9;
      };
      CHECK(within(x.a12_a0, rows[i].a12_a0, rows[i + 1].a12_a0));
      CHECK(within(x.a23_a0, rows[i].a23_a0, rows[i + 1].a23_a0));
      CHECK(within(x.a13_a0, rows[i].a13_a0, rows[i + 1].a13_a0));
    }
  }
}

TEST_CASE("van der Waals length") {
  const PhysicalConstants pc = PhysicalConstants::li6();
  // C6 chosen so that lvdw = 62.5 a0 for 6Li (inverted from the formula).
  const double C6 = 1.3322434882979547e-76;  // J m^6

  SUBCASE("6Li benchmark") {
    CHECK(rel_err(vdw_length(C6, pc.m, pc), 62.5 * pc.a0) < 1e-12);
  }
  SUBCASE("fourth-root scaling in C6") {
    CHECK(rel_err(vdw_length(16.0 * C6, pc.m, pc), 2.0 * vdw_length(C6, pc.m, pc)) < 1e-12);
  }
  SUBCASE("fourth-root scaling in mass") {
    CHECK(rel_err(vdw_length(C6, 16.0 * pc.m, pc), 2.0 * vdw_length(C6, pc.m, pc)) < 1e-12);
  }
  SUBCASE("non-positive C6") {
    CHECK_THROWS_AS(vdw_length(0.0, pc.m, pc), DomainError);
    CHECK_THROWS_AS(vdw_length(-1e-76, pc.m, pc), DomainError);
  }
}

TEST_CASE("universality classification") {
  const PhysicalConstants pc = PhysicalConstants::li6();
  const double lvdw = 62.5 * pc.a0;
  const double e_vdw = pc.hbar * pc.hbar / (pc.m * lvdw * lvdw);

  SUBCASE("the 895 G triple is universal in every pair") {
    const ScatteringTriple x{-8584, -5702, -2893, 895};
    const UniversalityReport r = classify_universality(x, 2.0 * e_vdw, lvdw, pc);
    CHECK(r.pair12);
    CHECK(r.pair23);
    CHECK(r.pair13);
    CHECK(r.energy);
    CHECK(r.universal);
  }
  SUBCASE("the |a| = 2 lvdw boundary counts as universal") {
    const ScatteringTriple x{-125.0, -8584, -5702, 895};
    const UniversalityReport r = classify_universality(x, 2.0 * e_vdw, lvdw, pc);
    CHECK(r.pair12);
  }
  SUBCASE("a small pair flips its flag and the overall verdict") {
    const ScatteringTriple x{-8584, -5702, -100, 895};
    const UniversalityReport r = classify_universality(x, 2.0 * e_vdw, lvdw, pc);
    CHECK(r.pair12);
    CHECK(r.pair23);
    CHECK_FALSE(r.pair13);
    CHECK_FALSE(r.universal);
  }
  SUBCASE("energy below the vdW scale flips the energy flag") {
    const ScatteringTriple x{-8584, -5702, -2893, 895};
    const UniversalityReport r = classify_universality(x, 0.5 * e_vdw, lvdw, pc);
    CHECK_FALSE(r.energy);
    CHECK_FALSE(r.universal);
  }
  SUBCASE("scale consistency: lengths x c, energy x 1/c^2 leaves all flags unchanged") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> da(-500.0, -50.0);
    std::uniform_real_distribution<double> dc(0.1, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
      const ScatteringTriple x{da(rng), da(rng), da(rng), 900};
      const double lv = -da(rng) * pc.a0 / 3.0;
      const double E = dc(rng) * pc.hbar * pc.hbar / (pc.m * lv * lv);
      const double c = dc(rng);
      const ScatteringTriple xs{c * x.a12_a0, c * x.a23_a0, c * x.a13_a0, x.B_gauss};
      const UniversalityReport r1 = classify_universality(x, E, lv, pc);
      const UniversalityReport r2 = classify_universality(xs, E / (c * c), c * lv, pc);
      CHECK(r1.pair12 == r2.pair12);
      CHECK(r1.pair23 == r2.pair23);
      CHECK(r1.pair13 == r2.pair13);
      CHECK(r1.energy == r2.energy);
      CHECK(r1.universal == r2.universal);
    }
  }
}

TEST_CASE("shipped sample table carries the anchor points") {
  const ScatteringTable t = ScatteringTable::load_file(data_path("li6_sample_a_table.csv"));
  const ScatteringTriple x = t.at(895);
  CHECK(x.a12_a0 == -8584);
  CHECK(x.a23_a0 == -5702);
  CHECK(x.a13_a0 == -2893);
  const ScatteringTriple hi = t.at(t.max_field());
  CHECK(hi.a12_a0 == -2140);
  CHECK(hi.a23_a0 == -2140);
  CHECK(hi.a13_a0 == -2140);
  // All-negative across the whole range (poles excluded by construction).
  for (const ScatteringRow& r : t.rows()) {
    CHECK(r.a12_a0 < 0);
    CHECK(r.a23_a0 < 0);
    CHECK(r.a13_a0 < 0);
  }
}
