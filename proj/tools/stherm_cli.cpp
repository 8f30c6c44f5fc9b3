// stherm: sweeps, single-point reports and demon-circuit checks for
// symmetry-constrained thermalization models.
//
// Exit codes: 0 success, 1 check failure, 2 configuration or I/O error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "stherm/config.hpp"
#include "stherm/ergotropy.hpp"
#include "stherm/errors.hpp"
#include "stherm/sweep.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

struct Options {
  std::string config;
  std::string grid;
  std::string spacing;
  std::string format = "csv";
  std::string out;
  unsigned jobs = 1;
  double t0 = 0.0;
  double t = 0.0;
};

int run_sweep_command(const Options &opt) {
  const stherm::LoadedConfig cfg = stherm::load_config(opt.config);
  stherm::AxisRange t0_range = cfg.t0_range, t_range = cfg.t_range;
  if (!opt.grid.empty()) std::tie(t0_range, t_range) = stherm::parse_grid_spec(opt.grid);
  const stherm::Spacing spacing =
      opt.spacing.empty() ? cfg.spacing : stherm::parse_spacing(opt.spacing);
  const stherm::SweepGrid grid = stherm::SweepGrid::from_ranges(t0_range, t_range, spacing);
  const stherm::OutputFormat format = stherm::parse_format(opt.format);
  const stherm::ThermalModel model = cfg.model.model();

  const auto rows = stherm::run_sweep(model, grid, opt.jobs);

  std::size_t failed = 0;
  for (const auto &r : rows)
    if (!r.error.empty()) ++failed;
  if (failed) std::cerr << failed << " of " << rows.size() << " points reported errors\n";

  if (opt.out.empty() || opt.out == "-") {
    stherm::emit(rows, format, std::cout);
    std::cout.flush();
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw stherm::IoError("cannot open output file '" + opt.out + "'");
    stherm::emit(rows, format, file);
  }
  return 0;
}

void print_scalar(const char *name, double value) {
  std::cout << "  " << std::left << std::setw(22) << name << stherm::format_double(value) << "\n";
}

int run_report_command(const Options &opt) {
  const stherm::LoadedConfig cfg = stherm::load_config(opt.config);
  const stherm::ThermalModel model = cfg.model.model();
  const stherm::Temperature t0(opt.t0), t(opt.t);
  const stherm::ThermoReport r = stherm::build_report(model, t0, t);
  const stherm::ResultRow row = stherm::evaluate_point(model, opt.t0, opt.t);

  std::cout << "model " << cfg.model.name << " (dim " << model.dim() << ", "
            << model.sectors().size() << " sectors)\n";
  print_scalar("t0", r.t0.value());
  print_scalar("t", r.t.value());
  std::cout << "energies\n";
  print_scalar("e_initial", r.e_initial);
  print_scalar("e_gibbs", r.e_gibbs);
  print_scalar("e_ss", r.e_ss);
  std::cout << "entropies (nats)\n";
  print_scalar("s_initial", r.s_initial);
  print_scalar("s_gibbs", r.s_gibbs);
  print_scalar("s_ss", r.s_ss);
  print_scalar("rel_ent_ss_gibbs", r.rel_ent_ss_gibbs);
  std::cout << "  " << std::left << std::setw(22) << "sector_probs";
  for (std::size_t i = 0; i < r.sector_probs.size(); ++i)
    std::cout << (i ? " " : "") << stherm::format_double(r.sector_probs[i]);
  std::cout << "\n";
  print_scalar("h_sectors", r.h_sectors);
  std::cout << "erasure\n";
  print_scalar("delta_s_sys", r.delta_s_sys);
  print_scalar("delta_s_bath", r.delta_s_bath);
  print_scalar("erasure_cost", r.erasure_cost);
  std::cout << "amplification\n";
  std::cout << "  " << std::left << std::setw(22) << "lambda"
            << (r.lambda ? stherm::format_double(*r.lambda) : std::string("undefined")) << "\n";
  std::cout << "  " << std::left << std::setw(22) << "classification"
            << stherm::to_string(r.classification) << "\n";
  std::cout << "battery\n";
  print_scalar("ergotropy", row.ergotropy);
  print_scalar("asymptotic_ergotropy", row.asymptotic_ergotropy);
  print_scalar("excess_ergotropy", row.excess_ergotropy);
  if (!row.error.empty()) std::cout << "  error                 " << row.error << "\n";
  return 0;
}

int run_demon_check_command(const Options &opt) {
  const stherm::LoadedConfig cfg = stherm::load_config(opt.config);
  const stherm::ThermalModel model = cfg.model.model();
  const stherm::DemonCheckReport report =
      stherm::demon_check(model, stherm::Temperature(opt.t0), stherm::Temperature(opt.t));
  for (const auto &c : report.checks) {
    std::cout << (c.passed ? "ok   " : "FAIL ") << std::left << std::setw(30) << c.name
              << " residual " << stherm::format_double(c.residual) << " (tol "
              << stherm::format_double(c.tolerance) << ")\n";
  }
  if (const auto *fail = report.first_failure()) {
    std::cerr << "demon-check failed: " << fail->name << "\n";
    return kExitCheckFailure;
  }
  return 0;
}

int run_validate_command(const Options &opt) {
  const stherm::LoadedConfig cfg = stherm::load_config(opt.config);
  const stherm::ThermalModel model = cfg.model.model();
  const stherm::SweepGrid grid = cfg.grid();
  std::cout << "ok: " << cfg.model.name << " (dim " << model.dim() << ", "
            << model.sectors().size() << " sectors, default grid " << grid.t0_values.size()
            << "x" << grid.t_values.size() << " " << stherm::to_string(grid.spacing) << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Symmetry-constrained thermalization: thermodynamic bookkeeping and battery ergotropy"};
  app.require_subcommand(1);
  Options opt;

  auto *sweep = app.add_subcommand("sweep", "Run a (T0, T) grid sweep and emit CSV or JSON");
  sweep->add_option("--config", opt.config, "Model config (JSON)")->required();
  sweep->add_option("--grid", opt.grid, "t0_min:t0_max:n,t_min:t_max:n");
  sweep->add_option("--spacing", opt.spacing, "linear | log");
  sweep->add_option("--format", opt.format, "csv | json");
  sweep->add_option("--out", opt.out, "Output file (default stdout)");
  sweep->add_option("--jobs", opt.jobs, "Worker threads")->envname("STHERM_JOBS")->check(CLI::PositiveNumber);

  auto *report = app.add_subcommand("report", "Print the full report for one (T0, T) point");
  report->add_option("--config", opt.config, "Model config (JSON)")->required();
  report->add_option("--t0", opt.t0, "Initial temperature")->required();
  report->add_option("--t", opt.t, "Bath temperature")->required();

  auto *demon = app.add_subcommand("demon-check", "Verify the demon-circuit identities");
  demon->add_option("--config", opt.config, "Model config (JSON)")->required();
  demon->add_option("--t0", opt.t0, "Initial temperature")->required();
  demon->add_option("--t", opt.t, "Bath temperature")->required();

  auto *validate = app.add_subcommand("validate", "Validate a model config");
  validate->add_option("--config", opt.config, "Model config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (*sweep) return run_sweep_command(opt);
    if (*report) return run_report_command(opt);
    if (*demon) return run_demon_check_command(opt);
    if (*validate) return run_validate_command(opt);
  } catch (const stherm::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
