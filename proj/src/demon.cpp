#include "stherm/demon.hpp"

#include <sstream>

#include "stherm/errors.hpp"

namespace stherm {

RegisterSpec::RegisterSpec(std::size_t num_sectors) : num_sectors_(num_sectors) {
  if (num_sectors_ == 0) throw SpecMismatch("register needs at least one sector level");
}

namespace {

ComplexMatrix projector_onto(std::size_t dim, std::size_t level) {
  ComplexMatrix p(dim);
  p(level, level) = 1.0;
  return p;
}

CompositeState make_composite(const ComplexMatrix &m, std::size_t system_dim,
                              std::size_t register_dim) {
  return CompositeState{DensityMatrix(hermitian_part(m)), system_dim, register_dim};
}

// Block <k| rho |l> acting on the system.
ComplexMatrix register_block(const CompositeState &c, std::size_t k, std::size_t l) {
  const std::size_t ns = c.system_dim, nr = c.register_dim;
  ComplexMatrix out(ns);
  const auto &m = c.state.matrix();
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < ns; ++b) out(a, b) = m(a * nr + k, b * nr + l);
  return out;
}

void check_register(const CompositeState &c, const RegisterSpec &reg) {
  if (c.register_dim != reg.dim()) {
    std::ostringstream msg;
    msg << "composite register dimension " << c.register_dim << " vs register spec "
        << reg.dim();
    throw SpecMismatch(msg.str());
  }
}

}  // namespace

CompositeState attach_register(const DensityMatrix &rho, const RegisterSpec &reg) {
  return make_composite(kron(rho.matrix(), projector_onto(reg.dim(), RegisterSpec::fiducial())),
                        rho.dim(), reg.dim());
}

ComplexMatrix correlate_unitary(const SectorDecomposition &sectors, const RegisterSpec &reg) {
  if (sectors.size() != reg.num_sectors()) {
    std::ostringstream msg;
    msg << sectors.size() << " sectors but register built for " << reg.num_sectors();
    throw SpecMismatch(msg.str());
  }
  const std::size_t nr = reg.dim();
  ComplexMatrix u(sectors.dim() * nr);
  for (std::size_t n = 0; n < sectors.size(); ++n) {
    const std::size_t level = reg.level_of(n);
    ComplexMatrix swap(nr);
    swap(level, RegisterSpec::fiducial()) = 1.0;
    swap(RegisterSpec::fiducial(), level) = 1.0;
    for (std::size_t k = 0; k < nr; ++k)
      if (k != level && k != RegisterSpec::fiducial()) swap(k, k) = 1.0;
    u += kron(sectors.projector(n), swap);
  }
  return u;
}

CompositeState apply_unitary(const CompositeState &composite, const ComplexMatrix &u) {
  if (u.dim() != composite.state.dim()) throw DimensionMismatch("apply_unitary");
  return make_composite(conjugate(u, composite.state.matrix()), composite.system_dim,
                        composite.register_dim);
}

CompositeState measure_register(const CompositeState &composite) {
  const std::size_t ns = composite.system_dim, nr = composite.register_dim;
  const auto &m = composite.state.matrix();
  ComplexMatrix out(ns * nr);
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < ns; ++b)
      for (std::size_t k = 0; k < nr; ++k) out(a * nr + k, b * nr + k) = m(a * nr + k, b * nr + k);
  return make_composite(out, ns, nr);
}

CompositeState demon_measure(const DensityMatrix &rho0, const SectorDecomposition &sectors,
                             const RegisterSpec &reg) {
  if (rho0.dim() != sectors.dim()) throw DimensionMismatch("demon_measure");
  const ComplexMatrix u = correlate_unitary(sectors, reg);
  return measure_register(apply_unitary(attach_register(rho0, reg), u));
}

CompositeState demon_channel(const ThermalModel &model, const DensityMatrix &rho0,
                             Temperature temp, const RegisterSpec &reg) {
  const CompositeState measured = demon_measure(rho0, model.sectors(), reg);
  const std::size_t ns = model.dim(), nr = reg.dim();

  ComplexMatrix out(ns * nr);
  // Outcome 0 (fiducial) has no weight after U; it is passed through unchanged.
  out += kron(register_block(measured, 0, 0),
              projector_onto(nr, RegisterSpec::fiducial()));
  for (std::size_t n = 0; n < model.sectors().size(); ++n) {
    const std::size_t level = reg.level_of(n);
    const double weight = register_block(measured, level, level).trace().real();
    if (weight == 0.0) continue;
    // Replacement channel X -> Tr(X) omega_n^beta on this branch.
    const DensityMatrix omega_n = sector_gibbs(model, n, temp);
    out += kron(omega_n.matrix() * Complex{weight, 0.0}, projector_onto(nr, level));
  }
  return make_composite(out, ns, nr);
}

CompositeState reset_unitary_path(const CompositeState &composite,
                                  const SectorDecomposition &sectors, const RegisterSpec &reg) {
  check_register(composite, reg);
  return apply_unitary(composite, correlate_unitary(sectors, reg).adjoint());
}

CompositeState landauer_erase(const CompositeState &composite, const ThermalModel &model,
                              Temperature temp) {
  if (composite.system_dim != model.dim()) throw DimensionMismatch("landauer_erase");
  const DensityMatrix omega = gibbs_state(model.hamiltonian(), temp);
  return make_composite(kron(omega.matrix(), register_marginal(composite).matrix()),
                        composite.system_dim, composite.register_dim);
}

CompositeState register_reset(const CompositeState &composite, const RegisterSpec &reg) {
  check_register(composite, reg);
  return make_composite(kron(system_marginal(composite).matrix(),
                             projector_onto(reg.dim(), RegisterSpec::fiducial())),
                        composite.system_dim, composite.register_dim);
}

DensityMatrix system_marginal(const CompositeState &composite) {
  ComplexMatrix out(composite.system_dim);
  for (std::size_t k = 0; k < composite.register_dim; ++k)
    out += register_block(composite, k, k);
  return DensityMatrix(hermitian_part(out));
}

DensityMatrix register_marginal(const CompositeState &composite) {
  const std::size_t ns = composite.system_dim, nr = composite.register_dim;
  const auto &m = composite.state.matrix();
  ComplexMatrix out(nr);
  for (std::size_t k = 0; k < nr; ++k)
    for (std::size_t l = 0; l < nr; ++l)
      for (std::size_t a = 0; a < ns; ++a) out(k, l) += m(a * nr + k, a * nr + l);
  return DensityMatrix(hermitian_part(out));
}

double mutual_information(const CompositeState &composite) {
  return von_neumann_entropy(system_marginal(composite)) +
         von_neumann_entropy(register_marginal(composite)) -
         von_neumann_entropy(composite.state);
}

std::vector<RegisterBranch> register_branches(const CompositeState &composite) {
  std::vector<RegisterBranch> out;
  for (std::size_t k = 0; k < composite.register_dim; ++k) {
    ComplexMatrix block = register_block(composite, k, k);
    const double p = block.trace().real();
    if (p <= 0.0) continue;
    block *= Complex{1.0 / p, 0.0};
    out.push_back(RegisterBranch{k, p, DensityMatrix(hermitian_part(block))});
  }
  return out;
}

double branch_entropy_average(const CompositeState &composite) {
  double s = 0.0;
  for (const auto &b : register_branches(composite))
    s += b.probability * von_neumann_entropy(b.system_state);
  return s;
}

}  // namespace stherm
