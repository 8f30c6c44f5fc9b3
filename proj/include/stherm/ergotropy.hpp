#pragma once

#include <limits>
#include <vector>

#include "stherm/thermal.hpp"

namespace stherm {

inline constexpr double kEntropyMatchTol = 1e-10;
inline constexpr double kEntropyFloor = 1e-12;
// beta_max = kBetaMaxScale / (E_max - E_min)
inline constexpr double kBetaMaxScale = 1e6;

struct PassiveDecomposition {
  DensityMatrix passive_state;
  double extracted_work = 0.0;
  std::vector<double> sorted_populations;  // descending
};

struct EffectiveTemperature {
  // +infinity marks an effectively pure state.
  double beta_star = 0.0;
  double entropy_residual = 0.0;

  bool is_infinite() const noexcept { return beta_star == std::numeric_limits<double>::infinity(); }
};

// Spectrum of rho (descending) paired with energy eigenstates (ascending).
PassiveDecomposition passive_state(const DensityMatrix &rho, const HermitianOperator &h);

double ergotropy(const DensityMatrix &rho, const HermitianOperator &h);

// Entropy of e^{-beta H}/Z from the energy spectrum alone.
double gibbs_entropy(std::span<const double> energies, double beta);

// Inverse temperature of the Gibbs state with the same entropy as rho, by
// bisection on [0, beta_max]. Throws DegenerateHamiltonian for H proportional
// to the identity and BracketFailure when S(rho) exceeds ln(dim).
EffectiveTemperature effective_inverse_temperature(const DensityMatrix &rho,
                                                   const HermitianOperator &h);

// S(rho||omega^{beta*}) / beta*. Throws PureStateLimit when beta* is infinite.
double asymptotic_ergotropy(const DensityMatrix &rho, const HermitianOperator &h);

// asymptotic_ergotropy - ergotropy.
double excess_ergotropy(const DensityMatrix &rho, const HermitianOperator &h);

}  // namespace stherm
