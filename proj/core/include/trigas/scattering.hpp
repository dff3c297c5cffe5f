#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trigas/constants.hpp"
#include "trigas/errors.hpp"

namespace trigas {

// One tabulated field point. Scattering lengths are kept in Bohr radii and
// the field in Gauss, matching the CSV interface; conversion to SI happens
// where the rate formulas need it.
struct ScatteringRow {
  double B_gauss;
  double a12_a0;
  double a23_a0;
  double a13_a0;
};

// Pairwise scattering lengths at one field.
struct ScatteringTriple {
  double a12_a0;
  double a23_a0;
  double a13_a0;
  double B_gauss;
};

// Tabulated a_ij(B) with monotone piecewise-linear interpolation per
// channel. Rows are validated on construction (B strictly increasing,
// >= 2 rows, all entries finite) and immutable afterwards, so all queries
// are pure and thread-safe.
class ScatteringTable {
 public:
  // CSV with header `B_gauss,a12_a0,a23_a0,a13_a0`; `#` lines are comments.
  // Throws ParseError naming the offending data row (1-based).
  static ScatteringTable load(std::istream& in);
  static ScatteringTable load_file(const std::string& path);
  static ScatteringTable from_rows(std::vector<ScatteringRow> rows);

  // Linear interpolation of each channel; exact at nodes.
  // Throws RangeError if B is outside [min_field, max_field].
  ScatteringTriple at(double B_gauss) const;

  double min_field() const { return rows_.front().B_gauss; }
  double max_field() const { return rows_.back().B_gauss; }
  const std::vector<ScatteringRow>& rows() const { return rows_; }

 private:
  explicit ScatteringTable(std::vector<ScatteringRow> rows) : rows_(std::move(rows)) {}
  std::vector<ScatteringRow> rows_;
};

// van der Waals length (m * C6 / hbar^2)^(1/4). C6 in J m^6, mass in kg,
// result in m. Throws DomainError for non-positive C6.
double vdw_length(double C6, double mass, const PhysicalConstants& pc);

// Universality flags per the van der Waals criteria: a pair passes when
// |a_ij| >= 2*lvdw, the energy passes when E >= hbar^2/(m*lvdw^2), and the
// boundary counts as universal (closed inequalities).
struct UniversalityReport {
  bool pair12;
  bool pair23;
  bool pair13;
  bool energy;
  bool universal;  // all of the above
};

UniversalityReport classify_universality(const ScatteringTriple& triple, double E_joule,
                                         double lvdw_m, const PhysicalConstants& pc);

}  // namespace trigas
