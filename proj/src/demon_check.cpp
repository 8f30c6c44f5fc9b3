#include <cmath>

#include "stherm/demon.hpp"
#include "stherm/sweep.hpp"

namespace stherm {

bool DemonCheckReport::all_passed() const { return first_failure() == nullptr; }

const CheckResult *DemonCheckReport::first_failure() const {
  for (const auto &c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

DemonCheckReport demon_check(const ThermalModel &model, Temperature t0, Temperature t) {
  DemonCheckReport report;
  auto record = [&](std::string name, double residual, double tol) {
    report.checks.push_back({std::move(name), residual, tol, std::isfinite(residual) && residual <= tol});
  };

  const auto &h = model.hamiltonian();
  const RegisterSpec reg(model.sectors().size());
  const DensityMatrix rho0 = gibbs_state(h, t0);
  const DensityMatrix omega = gibbs_state(h, t);
  const DensityMatrix rho_ss = s_thermalize(model, rho0, t);
  const auto probs = sector_probabilities(rho0, model.sectors());
  const double h_p = shannon_entropy(probs);

  const ComplexMatrix u = correlate_unitary(model.sectors(), reg);
  record("unitarity", max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim())), 1e-12);

  const CompositeState initial = attach_register(rho0, reg);
  const CompositeState round_trip =
      reset_unitary_path(apply_unitary(initial, u), model.sectors(), reg);
  record("u_then_reset_is_identity", trace_distance(round_trip.state, initial.state), 1e-12);

  const CompositeState measured = demon_measure(rho0, model.sectors(), reg);
  record("correlation_entropy_drop",
         std::abs(von_neumann_entropy(rho0) - branch_entropy_average(measured) - h_p), 1e-10);

  const CompositeState demon = demon_channel(model, rho0, t, reg);
  record("demon_consistency", trace_distance(system_marginal(demon), rho_ss), 1e-12);
  record("demon_mutual_information", std::abs(mutual_information(demon) - h_p), 1e-10);
  record("entropy_ledger",
         std::abs(von_neumann_entropy(rho_ss) - branch_entropy_average(demon) - h_p), 1e-10);

  // Pathway (b): unitary reset, then thermalize the system.
  const CompositeState reset = reset_unitary_path(demon, model.sectors(), reg);
  record("reset_system_marginal", trace_distance(system_marginal(reset), rho_ss), 1e-12);
  const DensityMatrix reg_after_reset = register_marginal(reset);
  record("reset_register_purity",
         std::abs(1.0 - (reg_after_reset.matrix() * reg_after_reset.matrix()).trace().real()),
         1e-10);
  record("reset_entropy_change",
         std::abs(von_neumann_entropy(reset.state) - von_neumann_entropy(demon.state)), 1e-10);
  const CompositeState path_b = landauer_erase(reset, model, t);
  const DensityMatrix sys_b = system_marginal(path_b);
  record("pathway_b_gibbs", trace_distance(sys_b, omega), 1e-10);

  // Pathway (c): Landauer erasure, then register reset.
  const CompositeState erased = landauer_erase(demon, model, t);
  record("erasure_mutual_information", std::abs(mutual_information(erased)), 1e-10);
  const CompositeState path_c = register_reset(erased, reg);
  const DensityMatrix sys_c = system_marginal(path_c);
  record("pathway_c_gibbs", trace_distance(sys_c, omega), 1e-10);
  record("pathway_equivalence", trace_distance(sys_b, sys_c), 1e-10);
  record("pathway_c_register_fiducial",
         1.0 - register_marginal(path_c).matrix()(RegisterSpec::fiducial(), RegisterSpec::fiducial()).real(),
         1e-12);
  return report;
}

}  // namespace stherm
