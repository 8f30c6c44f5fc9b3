#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stherm/thermal.hpp"

namespace stherm {

enum class Spacing { Linear, Log };

std::string_view to_string(Spacing s);
// Throws ValidationError.
Spacing parse_spacing(std::string_view text);

// Model file contents. Exactly one of `energies` (diagonal Hamiltonian) or
// `matrix` is set.
struct ModelConfig {
  std::string name;
  std::optional<std::vector<double>> energies;
  std::optional<ComplexMatrix> matrix;
  std::vector<std::vector<std::size_t>> sectors;

  // Builds and validates the ThermalModel; throws ValidationError naming the
  // violated invariant.
  ThermalModel model() const;
};

struct AxisRange {
  double min = 0.01;
  double max = 2.0;
  std::size_t count = 100;
};

struct SweepGrid {
  std::vector<double> t0_values;
  std::vector<double> t_values;
  Spacing spacing = Spacing::Linear;

  // Throws ValidationError for empty, non-positive or non-ascending axes.
  static SweepGrid from_ranges(const AxisRange &t0, const AxisRange &t, Spacing spacing);
  void validate() const;
};

// n points from min to max inclusive; n == 1 gives {min}.
std::vector<double> axis_values(const AxisRange &range, Spacing spacing);

// "t0_min:t0_max:n,t_min:t_max:n". Throws ValidationError.
std::pair<AxisRange, AxisRange> parse_grid_spec(std::string_view spec);

struct LoadedConfig {
  ModelConfig model;
  AxisRange t0_range;
  AxisRange t_range;
  Spacing spacing = Spacing::Linear;

  SweepGrid grid() const { return SweepGrid::from_ranges(t0_range, t_range, spacing); }
};

// Parses JSON text. Throws ParseError (with line/column) or ValidationError.
LoadedConfig parse_config(std::string_view text);
// Throws IoError when the file cannot be read.
LoadedConfig load_config(const std::filesystem::path &path);

}  // namespace stherm
