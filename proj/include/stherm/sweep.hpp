#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stherm/config.hpp"
#include "stherm/thermo_analysis.hpp"

namespace stherm {

// One grid point: the ThermoReport scalars plus the battery quantities.
// Numeric fields that could not be computed hold NaN and `error` names the
// failure ("Kind: message"); successful rows have an empty `error`.
struct ResultRow {
  double t0 = 0.0;
  double t = 0.0;
  double ergotropy = 0.0;
  double asymptotic_ergotropy = 0.0;
  double excess_ergotropy = 0.0;
  double e_ss = 0.0;
  double e_gibbs = 0.0;
  double s_ss = 0.0;
  double s_gibbs = 0.0;
  double rel_entropy = 0.0;
  double delta_s_sys = 0.0;
  double delta_s_bath = 0.0;
  double erasure_cost = 0.0;
  std::optional<double> lambda;
  Classification classification = Classification::Undefined;
  double h_sectors = 0.0;
  std::string error;
};

// Column names in output order.
const std::vector<std::string_view> &result_row_fields();

ResultRow evaluate_point(const ThermalModel &model, double t0, double t);

// One row per (t0, t) pair, t0 outer and t inner, independent of `jobs`.
std::vector<ResultRow> run_sweep(const ThermalModel &model, const SweepGrid &grid,
                                 unsigned jobs = 1);

enum class OutputFormat { Csv, Json };

// Throws ValidationError.
OutputFormat parse_format(std::string_view text);

// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

// Throws ValidationError when rows is empty and IoError when the stream fails.
void emit(const std::vector<ResultRow> &rows, OutputFormat format, std::ostream &out);
std::string emit_to_string(const std::vector<ResultRow> &rows, OutputFormat format);

// Inverse of the JSON emitter, for round-trip checks and downstream tools.
std::vector<ResultRow> parse_rows_json(std::string_view text);

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct DemonCheckReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  // First failing check, or nullptr.
  const CheckResult *first_failure() const;
};

// Runs the circuit identities on rho0 = omega^{beta0} at bath temperature t.
DemonCheckReport demon_check(const ThermalModel &model, Temperature t0, Temperature t);

}  // namespace stherm
