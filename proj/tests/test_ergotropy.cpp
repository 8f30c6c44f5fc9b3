#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fixtures/fig2_oracle.hpp"
#include "stherm/ergotropy.hpp"
#include "stherm/errors.hpp"
#include "support.hpp"

using namespace stherm;
namespace fx = stherm::fixtures;

namespace {

DensityMatrix steady(double t0, double t) {
  const ThermalModel model = testing::fig2_model();
  return s_thermalize(model, gibbs_state(model.hamiltonian(), Temperature(t0)), Temperature(t));
}

// Sort-and-dot oracle on diagonal states.
double scalar_ergotropy(std::vector<double> pops, std::vector<double> energies) {
  double e = 0.0;
  for (std::size_t i = 0; i < pops.size(); ++i) e += pops[i] * energies[i];
  std::sort(pops.rbegin(), pops.rend());
  std::sort(energies.begin(), energies.end());
  double passive = 0.0;
  for (std::size_t i = 0; i < pops.size(); ++i) passive += pops[i] * energies[i];
  return e - passive;
}

}  // namespace

TEST_CASE("single-copy ergotropy") {
  const ThermalModel model = testing::fig2_model();
  const auto &h = model.hamiltonian();

  for (double t : {0.05, 0.3, 1.0, 7.0}) CHECK(ergotropy(gibbs_state(h, Temperature(t)), h) == 0.0);
  CHECK(ergotropy(DensityMatrix::maximally_mixed(4), h) == 0.0);

  const DensityMatrix cold = steady(fx::PointCold::t0, fx::PointCold::t);
  const PassiveDecomposition pd = passive_state(cold, h);
  CHECK(pd.extracted_work == doctest::Approx(fx::PointCold::ergotropy).epsilon(1e-11));
  CHECK(pd.extracted_work == doctest::Approx(0.0314).epsilon(1e-3));
  CHECK(pd.extracted_work ==
        doctest::Approx(scalar_ergotropy(cold.populations(), {0.0, 0.1, 0.2, 1.0})).epsilon(1e-12));
  // Populations of E1 and E2 swap in the passive state.
  const auto passive = pd.passive_state.populations();
  CHECK(passive[1] == doctest::Approx(fx::PointCold::rho2));
  CHECK(passive[2] == doctest::Approx(fx::PointCold::rho1));
  CHECK(std::is_sorted(pd.sorted_populations.rbegin(), pd.sorted_populations.rend()));

  CHECK(ergotropy(steady(0.4, 0.4), h) <= 1e-12);
  CHECK_THROWS_AS(ergotropy(DensityMatrix::maximally_mixed(3), h), DimensionMismatch);
}

TEST_CASE("effective inverse temperature") {
  const ThermalModel model = testing::fig2_model();
  const auto &h = model.hamiltonian();

  for (double t : {0.03, 0.5, 1.0, 4.0}) {
    const EffectiveTemperature eff = effective_inverse_temperature(gibbs_state(h, Temperature(t)), h);
    CHECK(eff.beta_star == doctest::Approx(1.0 / t).epsilon(1e-8));
    CHECK(std::abs(eff.entropy_residual) <= kEntropyMatchTol);
  }
  CHECK(effective_inverse_temperature(DensityMatrix::maximally_mixed(4), h).beta_star == 0.0);
  CHECK(effective_inverse_temperature(DensityMatrix::basis_state(4, 2), h).is_infinite());

  const EffectiveTemperature cold = effective_inverse_temperature(steady(0.05, 1.0), h);
  CHECK(cold.beta_star == doctest::Approx(fx::PointCold::beta_star).epsilon(1e-9));
  CHECK(std::abs(cold.entropy_residual) <= kEntropyMatchTol);

  const std::vector<double> flat{0.3, 0.3, 0.3};
  CHECK_THROWS_AS(effective_inverse_temperature(DensityMatrix::maximally_mixed(3),
                                                validate_hermitian(ComplexMatrix::diagonal(flat))),
                  DegenerateHamiltonian);
}

TEST_CASE("asymptotic and excess ergotropy") {
  const ThermalModel model = testing::fig2_model();
  const auto &h = model.hamiltonian();

  for (double t : {0.05, 0.5, 2.0}) {
    const DensityMatrix g = gibbs_state(h, Temperature(t));
    CHECK(asymptotic_ergotropy(g, h) <= 1e-10);
    CHECK(std::abs(excess_ergotropy(g, h)) <= 1e-10);
  }
  for (double t : {0.02, 0.3, 1.7}) {
    const DensityMatrix diag = steady(t, t);
    CHECK(asymptotic_ergotropy(diag, h) <= 1e-10);
    CHECK(std::abs(excess_ergotropy(diag, h)) <= 1e-10);
  }
  CHECK(asymptotic_ergotropy(DensityMatrix::maximally_mixed(4), h) == 0.0);

  const DensityMatrix cold = steady(fx::PointCold::t0, fx::PointCold::t);
  const double asym = asymptotic_ergotropy(cold, h);
  CHECK(asym == doctest::Approx(fx::PointCold::asymptotic).epsilon(1e-9));
  CHECK(asym >= ergotropy(cold, h));

  // Single-copy passive, asymptotically active.
  const DensityMatrix passive = steady(fx::PointPassive::t0, fx::PointPassive::t);
  CHECK(ergotropy(passive, h) == 0.0);
  CHECK(asymptotic_ergotropy(passive, h) == doctest::Approx(fx::PointPassive::asymptotic).epsilon(1e-9));
  CHECK(excess_ergotropy(passive, h) == doctest::Approx(fx::PointPassive::asymptotic).epsilon(1e-9));

  CHECK_THROWS_AS(asymptotic_ergotropy(DensityMatrix::basis_state(4, 0), h), PureStateLimit);
}

TEST_CASE("property: ergotropy invariants on random states") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 7);
    const HermitianOperator h = testing::random_hermitian(dim, rng);
    const DensityMatrix rho = testing::random_density(dim, rng);

    const PassiveDecomposition pd = passive_state(rho, h);
    CHECK(pd.extracted_work >= 0.0);
    CHECK(ergotropy(pd.passive_state, h) <= 1e-10);
    // Passive state commutes with H.
    const ComplexMatrix comm = h.matrix() * pd.passive_state.matrix() - pd.passive_state.matrix() * h.matrix();
    CHECK(comm.max_abs() <= 1e-10);

    // Depends only on the two spectra.
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const ComplexMatrix p = testing::permutation_matrix(perm);
    const DensityMatrix rho_p(hermitian_part(conjugate(p, rho.matrix())));
    const HermitianOperator h_p = hermitian_part(conjugate(p, h.matrix()));
    CHECK(std::abs(ergotropy(rho_p, h_p) - pd.extracted_work) <= 1e-10);

    const double asym = asymptotic_ergotropy(rho, h);
    CHECK(asym >= pd.extracted_work - 1e-9);
    const EffectiveTemperature eff = effective_inverse_temperature(rho, h);
    CHECK(std::abs(eff.entropy_residual) <= kEntropyMatchTol);

    // Zero set: asymptotic ergotropy vanishes iff rho is the matched Gibbs state.
    const bool thermal = trace_distance(rho, gibbs_state(h, Temperature(1.0 / eff.beta_star))) <= 1e-8;
    CHECK(thermal == (asym <= 1e-10));

    const Temperature t(0.2 + 0.1 * trial);
    const DensityMatrix g = gibbs_state(h, t);
    const double asym_g = asymptotic_ergotropy(g, h);
    CHECK(asym_g <= 1e-10);
    CHECK(trace_distance(g, gibbs_state(h, Temperature(1.0 / effective_inverse_temperature(g, h).beta_star))) <= 1e-8);
  }
}
