#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures/fig2_oracle.hpp"
#include "stherm/demon.hpp"
#include "stherm/errors.hpp"
#include "stherm/sweep.hpp"
#include "support.hpp"

using namespace stherm;
namespace fx = stherm::fixtures;

namespace {

double unitarity_residual(const ComplexMatrix &u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
}

}  // namespace

TEST_CASE("register spec and correlating unitary") {
  CHECK_THROWS_AS(RegisterSpec(0), SpecMismatch);
  const RegisterSpec reg(2);
  CHECK(reg.dim() == 3);
  CHECK(reg.level_of(0) == 1);
  CHECK(reg.level_of(1) == 2);

  const ThermalModel model = testing::fig2_model();
  const ComplexMatrix u = correlate_unitary(model.sectors(), reg);
  CHECK(u.dim() == 12);
  CHECK(unitarity_residual(u) <= 1e-12);
  CHECK_THROWS_AS(correlate_unitary(model.sectors(), RegisterSpec(3)), SpecMismatch);

  // One sector: a swap of levels 0 and 1 on a two-level register.
  const ThermalModel single = testing::fig2_single_sector();
  const ComplexMatrix swap = correlate_unitary(single.sectors(), RegisterSpec(1));
  const ComplexMatrix x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(max_abs_diff(swap, kron(ComplexMatrix::identity(4), x)) == 0.0);
}

TEST_CASE("demon channel on the reference model") {
  const ThermalModel model = testing::fig2_model();
  const RegisterSpec reg(2);
  const Temperature t0(fx::PointCold::t0), t(fx::PointCold::t);
  const DensityMatrix rho0 = gibbs_state(model.hamiltonian(), t0);

  const CompositeState measured = demon_measure(rho0, model.sectors(), reg);
  const auto reg_pops = register_marginal(measured).populations();
  CHECK(std::abs(reg_pops[0]) <= 1e-14);
  CHECK(reg_pops[1] == doctest::Approx(fx::PointCold::p_even).epsilon(1e-13));
  CHECK(reg_pops[2] == doctest::Approx(fx::PointCold::p_odd).epsilon(1e-13));
  CHECK(mutual_information(measured) == doctest::Approx(shannon_entropy(sector_probabilities(rho0, model.sectors()))).epsilon(1e-10));

  const CompositeState out = demon_channel(model, rho0, t, reg);
  const DensityMatrix rho_ss = s_thermalize(model, rho0, t);
  CHECK(trace_distance(system_marginal(out), rho_ss) <= 1e-12);
  CHECK(mutual_information(out) == doctest::Approx(fx::PointCold::h_sectors).epsilon(1e-10));

  const auto branches = register_branches(out);
  REQUIRE(branches.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(branches[i].level == i + 1);
    CHECK(trace_distance(branches[i].system_state, sector_gibbs(model, i, t)) <= 1e-12);
  }

  // Reset by U†: back to rho_SS with the register on the fiducial level.
  const CompositeState reset = reset_unitary_path(out, model.sectors(), reg);
  const CompositeState expected = attach_register(rho_ss, reg);
  CHECK(max_abs_diff(reset.state.matrix(), expected.state.matrix()) <= 1e-12);

  // Landauer erasure leaves omega ⊗ diag(0, p_even, p_odd).
  const CompositeState erased = landauer_erase(out, model, t);
  const std::vector<double> reg_diag{0.0, fx::PointCold::p_even, fx::PointCold::p_odd};
  const ComplexMatrix target =
      kron(gibbs_state(model.hamiltonian(), t).matrix(), ComplexMatrix::diagonal(reg_diag));
  CHECK(max_abs_diff(erased.state.matrix(), target) <= 1e-12);
  CHECK(std::abs(mutual_information(erased)) <= 1e-10);

  const CompositeState cleared = register_reset(erased, reg);
  CHECK(register_marginal(cleared).populations()[0] == doctest::Approx(1.0));
}

TEST_CASE("demon_check passes on the reference and random models") {
  const ThermalModel model = testing::fig2_model();
  for (auto [t0v, tv] : {std::pair{0.05, 1.0}, std::pair{1.0, 0.05}, std::pair{0.5, 0.5}}) {
    const DemonCheckReport report = demon_check(model, Temperature(t0v), Temperature(tv));
    CAPTURE(t0v);
    CAPTURE(tv);
    CHECK(report.all_passed());
    CHECK(report.first_failure() == nullptr);
    CHECK(report.checks.size() >= 10);
  }
  CHECK(demon_check(testing::fig2_single_sector(), Temperature(0.3), Temperature(1.5)).all_passed());

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> temp(0.1, 2.0);
  for (int trial = 0; trial < 12; ++trial) {
    const ThermalModel m = testing::random_block_model(3 + static_cast<std::size_t>(trial % 5),
                                                       1 + static_cast<std::size_t>(trial % 3), rng);
    const DemonCheckReport report = demon_check(m, Temperature(temp(rng)), Temperature(temp(rng)));
    if (const auto *fail = report.first_failure()) {
      CAPTURE(fail->name);
      CAPTURE(fail->residual);
      CHECK(false);
    }
  }
}
