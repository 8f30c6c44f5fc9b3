#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "stherm/thermal.hpp"

namespace stherm {

inline constexpr double kDenomTol = 1e-10;
inline constexpr double kClassTol = 1e-8;

enum class Classification { Amplified, Mitigated, BreakEven, Undefined };

std::string_view to_string(Classification c);

// Energy/entropy bookkeeping for one (T0, T) pair with rho0 = omega^{beta0}.
struct ThermoReport {
  Temperature t0{1.0};
  Temperature t{1.0};

  double e_ss = 0.0;
  double e_gibbs = 0.0;
  double e_initial = 0.0;

  double s_ss = 0.0;
  double s_gibbs = 0.0;
  double s_initial = 0.0;

  double rel_ent_ss_gibbs = 0.0;
  std::vector<double> sector_probs;
  double h_sectors = 0.0;

  double delta_s_sys = 0.0;
  double delta_s_bath = 0.0;
  double erasure_cost = 0.0;

  std::optional<double> lambda;
  Classification classification = Classification::Undefined;
};

// (S(rho_SS) - S(omega^beta) + S(rho_SS||omega^beta)) / beta.
double energy_gap_info(const ThermalModel &model, const DensityMatrix &rho_ss,
                       Temperature temp);

// S(omega^beta) - sum_i p_i S(omega_i^beta).
double delta_s_sys(const ThermalModel &model, std::span<const double> sector_probs,
                   Temperature temp);

// beta (E(rho_SS) - E(omega^beta)).
double delta_s_bath(const ThermalModel &model, const DensityMatrix &rho_ss,
                    Temperature temp);

// S(rho_SS) - sum_i p_i S(omega_i^beta) + S(rho_SS||omega^beta), with rho_SS
// and p_i derived from rho0.
double erasure_cost(const ThermalModel &model, const DensityMatrix &rho0,
                    Temperature temp);

// (erasure_cost - delta_s_sys) / beta.
double energy_gap_from_erasure(const ThermalModel &model, const DensityMatrix &rho0,
                               Temperature temp);

// (E(rho_SS) - E(omega^{beta0})) / (E(omega^beta) - E(omega^{beta0})); empty
// when the denominator magnitude is below kDenomTol.
std::optional<double> amplification_ratio(const ThermalModel &model,
                                          const DensityMatrix &rho0, Temperature t0,
                                          Temperature t);

// Same ratio written with entropies and relative entropies measured against
// the initial bath at T0. Empty when either denominator is below kDenomTol
// (energy units, scaled by beta0 for the entropy form).
std::optional<double> amplification_ratio_entropy_form(const ThermalModel &model,
                                                       const DensityMatrix &rho0,
                                                       Temperature t0,
                                                       Temperature t);

Classification classify(std::optional<double> lambda);
Classification classify(const ThermoReport &report);

// True when the verdict agrees with the heat-flow reading of delta_s_bath:
// amplification means heat leaves the system when the constraint is lifted
// for T > T0, and enters it for T < T0.
bool verdict_matches_bath_entropy(const ThermoReport &report);

ThermoReport build_report(const ThermalModel &model, Temperature t0, Temperature t);

}  // namespace stherm
