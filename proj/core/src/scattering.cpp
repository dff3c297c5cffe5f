#include "trigas/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>

#include "csv_util.hpp"

namespace trigas {

namespace {

constexpr const char* kHeader = "B_gauss,a12_a0,a23_a0,a13_a0";

void validate_rows(const std::vector<ScatteringRow>& rows) {
  if (rows.size() < 2)
    throw ParseError("scattering table needs at least 2 rows, got " + std::to_string(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    const ScatteringRow& r = rows[i];
    if (!std::isfinite(r.B_gauss) || !std::isfinite(r.a12_a0) || !std::isfinite(r.a23_a0) ||
        !std::isfinite(r.a13_a0))
      throw ParseError("scattering table row " + std::to_string(i + 1) +
                       ": non-finite entry (split the table at poles)");
    if (i > 0 && !(r.B_gauss > rows[i - 1].B_gauss))
      throw ParseError("scattering table row " + std::to_string(i + 1) +
                       ": B must be strictly increasing (" + std::to_string(r.B_gauss) +
                       " G after " + std::to_string(rows[i - 1].B_gauss) + " G)");
  }
}

}  // namespace

ScatteringTable ScatteringTable::load(std::istream& in) {
  std::string line;
  if (!csv::next_line(in, line)) throw ParseError("scattering table: empty input");
  if (line != kHeader)
    throw ParseError("scattering table: expected header '" + std::string(kHeader) + "', got '" +
                     line + "'");

  std::vector<ScatteringRow> rows;
  size_t row_index = 0;
  while (csv::next_line(in, line)) {
    ++row_index;
    const std::string where = "scattering table row " + std::to_string(row_index);
    auto fields = csv::split_fields(line);
    if (fields.size() != 4)
      throw ParseError(where + ": expected 4 fields, got " + std::to_string(fields.size()));
    rows.push_back(ScatteringRow{csv::parse_double(fields[0], where),
                                 csv::parse_double(fields[1], where),
                                 csv::parse_double(fields[2], where),
                                 csv::parse_double(fields[3], where)});
  }
  validate_rows(rows);
  return ScatteringTable(std::move(rows));
}

ScatteringTable ScatteringTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scattering table '" + path + "'");
  return load(in);
}

ScatteringTable ScatteringTable::from_rows(std::vector<ScatteringRow> rows) {
  validate_rows(rows);
  return ScatteringTable(std::move(rows));
}

ScatteringTriple ScatteringTable::at(double B_gauss) const {
  if (!(B_gauss >= min_field()) || !(B_gauss <= max_field()))
    throw RangeError("field " + std::to_string(B_gauss) + " G outside table range [" +
                     std::to_string(min_field()) + ", " + std::to_string(max_field()) + "] G");

  auto it = std::lower_bound(rows_.begin(), rows_.end(), B_gauss,
                             [](const ScatteringRow& r, double b) { return r.B_gauss < b; });
  if (it->B_gauss == B_gauss)
    return ScatteringTriple{it->a12_a0, it->a23_a0, it->a13_a0, B_gauss};

  const ScatteringRow& hi = *it;
  const ScatteringRow& lo = *std::prev(it);
  const double w = (B_gauss - lo.B_gauss) / (hi.B_gauss - lo.B_gauss);
  auto lerp = [w](double y0, double y1) { return y0 + w * (y1 - y0); };
  return ScatteringTriple{lerp(lo.a12_a0, hi.a12_a0), lerp(lo.a23_a0, hi.a23_a0),
                          lerp(lo.a13_a0, hi.a13_a0), B_gauss};
}

double vdw_length(double C6, double mass, const PhysicalConstants& pc) {
  if (!(C6 > 0.0)) throw DomainError("vdw_length: C6 must be positive");
  return std::pow(mass * C6 / (pc.hbar * pc.hbar), 0.25);
}

UniversalityReport classify_universality(const ScatteringTriple& triple, double E_joule,
                                         double lvdw_m, const PhysicalConstants& pc) {
  if (!(lvdw_m > 0.0)) throw DomainError("classify_universality: lvdw must be positive");
  const double threshold_m = 2.0 * lvdw_m;
  auto pair_ok = [&](double a_a0) { return std::abs(a_a0) * pc.a0 >= threshold_m; };
  UniversalityReport r{};
  r.pair12 = pair_ok(triple.a12_a0);
  r.pair23 = pair_ok(triple.a23_a0);
  r.pair13 = pair_ok(triple.a13_a0);
  r.energy = E_joule >= pc.hbar * pc.hbar / (pc.m * lvdw_m * lvdw_m);
  r.universal = r.pair12 && r.pair23 && r.pair13 && r.energy;
  return r;
}

}  // namespace trigas
