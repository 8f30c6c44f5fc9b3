#include "stherm/thermo_analysis.hpp"

#include <cmath>

#include "stherm/errors.hpp"

namespace stherm {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Amplified: return "Amplified";
    case Classification::Mitigated: return "Mitigated";
    case Classification::BreakEven: return "BreakEven";
    case Classification::Undefined: return "Undefined";
  }
  return "Undefined";
}

namespace {

// sum_i p_i S(omega_i^beta)
double sector_entropy_average(const ThermalModel &model,
                              std::span<const double> sector_probs,
                              Temperature temp) {
  if (sector_probs.size() != model.sectors().size())
    throw DimensionMismatch("sector probability count does not match sectors");
  double avg = 0.0;
  for (std::size_t i = 0; i < sector_probs.size(); ++i) {
    if (sector_probs[i] == 0.0) continue;
    avg += sector_probs[i] * von_neumann_entropy(sector_gibbs(model, i, temp));
  }
  return avg;
}

}  // namespace

double energy_gap_info(const ThermalModel &model, const DensityMatrix &rho_ss,
                       Temperature temp) {
  const DensityMatrix omega = gibbs_state(model.hamiltonian(), temp);
  return (von_neumann_entropy(rho_ss) - von_neumann_entropy(omega) +
          relative_entropy_to_gibbs(rho_ss, model.hamiltonian(), temp)) *
         temp.value();
}

double delta_s_sys(const ThermalModel &model, std::span<const double> sector_probs,
                   Temperature temp) {
  const DensityMatrix omega = gibbs_state(model.hamiltonian(), temp);
  return von_neumann_entropy(omega) - sector_entropy_average(model, sector_probs, temp);
}

double delta_s_bath(const ThermalModel &model, const DensityMatrix &rho_ss,
                    Temperature temp) {
  const DensityMatrix omega = gibbs_state(model.hamiltonian(), temp);
  return temp.beta() * (internal_energy(rho_ss, model.hamiltonian()) -
                        internal_energy(omega, model.hamiltonian()));
}

double erasure_cost(const ThermalModel &model, const DensityMatrix &rho0,
                    Temperature temp) {
  const DensityMatrix rho_ss = s_thermalize(model, rho0, temp);
  const auto probs = sector_probabilities(rho0, model.sectors());
  return von_neumann_entropy(rho_ss) - sector_entropy_average(model, probs, temp) +
         relative_entropy_to_gibbs(rho_ss, model.hamiltonian(), temp);
}

double energy_gap_from_erasure(const ThermalModel &model, const DensityMatrix &rho0,
                               Temperature temp) {
  const auto probs = sector_probabilities(rho0, model.sectors());
  return (erasure_cost(model, rho0, temp) - delta_s_sys(model, probs, temp)) *
         temp.value();
}

std::optional<double> amplification_ratio(const ThermalModel &model,
                                          const DensityMatrix &rho0, Temperature t0,
                                          Temperature t) {
  const auto &h = model.hamiltonian();
  const double e_initial = internal_energy(gibbs_state(h, t0), h);
  const double e_gibbs = internal_energy(gibbs_state(h, t), h);
  const double e_ss = internal_energy(s_thermalize(model, rho0, t), h);
  const double denom = e_gibbs - e_initial;
  if (std::abs(denom) < kDenomTol) return std::nullopt;
  return (e_ss - e_initial) / denom;
}

std::optional<double> amplification_ratio_entropy_form(const ThermalModel &model,
                                                       const DensityMatrix &rho0,
                                                       Temperature t0,
                                                       Temperature t) {
  const auto &h = model.hamiltonian();
  const DensityMatrix omega0 = gibbs_state(h, t0);
  const DensityMatrix omega = gibbs_state(h, t);
  const DensityMatrix rho_ss = s_thermalize(model, rho0, t);
  const double s0 = von_neumann_entropy(omega0);
  const double num = von_neumann_entropy(rho_ss) - s0 +
                     relative_entropy_to_gibbs(rho_ss, h, t0);
  const double den = von_neumann_entropy(omega) - s0 +
                     relative_entropy_to_gibbs(omega, h, t0);
  const double e_den = internal_energy(omega, h) - internal_energy(omega0, h);
  if (std::abs(e_den) < kDenomTol || std::abs(den) < kDenomTol * t0.beta())
    return std::nullopt;
  return num / den;
}

Classification classify(std::optional<double> lambda) {
  if (!lambda) return Classification::Undefined;
  if (*lambda > 1.0 + kClassTol) return Classification::Amplified;
  if (*lambda < 1.0 - kClassTol) return Classification::Mitigated;
  return Classification::BreakEven;
}

Classification classify(const ThermoReport &report) { return classify(report.lambda); }

bool verdict_matches_bath_entropy(const ThermoReport &report) {
  const Classification verdict = classify(report);
  if (!report.lambda) return verdict == Classification::Undefined;
  const double orientation = report.t.value() > report.t0.value()   ? 1.0
                             : report.t.value() < report.t0.value() ? -1.0
                                                                    : 0.0;
  if (orientation == 0.0) return false;
  // lambda - 1 = delta_s_bath / (beta * (E_gibbs - E_initial)); the verdict
  // is compared against that implied deviation.
  const double denom = report.e_gibbs - report.e_initial;
  const double implied = report.delta_s_bath / (report.t.beta() * std::abs(denom));
  const double signed_bath = orientation * report.delta_s_bath;
  const bool near_boundary = std::abs(std::abs(implied) - kClassTol) <= 1e-6 * kClassTol;
  switch (verdict) {
    case Classification::Amplified:
      return signed_bath > 0.0 && (std::abs(implied) > kClassTol || near_boundary);
    case Classification::Mitigated:
      return signed_bath < 0.0 && (std::abs(implied) > kClassTol || near_boundary);
    case Classification::BreakEven:
      return std::abs(implied) <= kClassTol || near_boundary;
    case Classification::Undefined:
      return false;
  }
  return false;
}

ThermoReport build_report(const ThermalModel &model, Temperature t0, Temperature t) {
  const auto &h = model.hamiltonian();
  ThermoReport r;
  r.t0 = t0;
  r.t = t;

  const DensityMatrix rho0 = gibbs_state(h, t0);
  const DensityMatrix omega = gibbs_state(h, t);
  const DensityMatrix rho_ss = s_thermalize(model, rho0, t);

  r.e_initial = internal_energy(rho0, h);
  r.e_gibbs = internal_energy(omega, h);
  r.e_ss = internal_energy(rho_ss, h);
  r.s_initial = von_neumann_entropy(rho0);
  r.s_gibbs = von_neumann_entropy(omega);
  r.s_ss = von_neumann_entropy(rho_ss);
  r.rel_ent_ss_gibbs = relative_entropy_to_gibbs(rho_ss, h, t);

  r.sector_probs = sector_probabilities(rho0, model.sectors());
  r.h_sectors = shannon_entropy(r.sector_probs);

  const double sector_avg = sector_entropy_average(model, r.sector_probs, t);
  r.delta_s_sys = r.s_gibbs - sector_avg;
  r.delta_s_bath = t.beta() * (r.e_ss - r.e_gibbs);
  r.erasure_cost = r.s_ss - sector_avg + r.rel_ent_ss_gibbs;

  const double denom = r.e_gibbs - r.e_initial;
  if (std::abs(denom) >= kDenomTol) r.lambda = (r.e_ss - r.e_initial) / denom;
  r.classification = classify(r.lambda);
  return r;
}

}  // namespace stherm
