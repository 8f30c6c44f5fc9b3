#include "stherm/ergotropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "stherm/errors.hpp"

namespace stherm {

PassiveDecomposition passive_state(const DensityMatrix &rho, const HermitianOperator &h) {
  if (rho.dim() != h.dim()) throw DimensionMismatch("passive_state");
  const EigenSystem energy = eigh(h);  // ascending, stable
  std::vector<double> pops = rho.spectrum();
  std::stable_sort(pops.begin(), pops.end(), std::greater<>());

  double passive_energy = 0.0;
  for (std::size_t k = 0; k < pops.size(); ++k) passive_energy += pops[k] * energy.eigenvalues[k];

  double work = internal_energy(rho, h) - passive_energy;
  if (work < 0.0 && work > -1e-12) work = 0.0;

  // Clamping can leave the spectrum a hair off unit trace; renormalize.
  double total = 0.0;
  for (double p : pops) total += p;
  std::vector<double> normalized = pops;
  for (double &p : normalized) p /= total;

  return PassiveDecomposition{
      DensityMatrix(from_spectrum(normalized, energy.eigenvectors)),
      work,
      std::move(pops),
  };
}

double ergotropy(const DensityMatrix &rho, const HermitianOperator &h) {
  return passive_state(rho, h).extracted_work;
}

double gibbs_entropy(std::span<const double> energies, double beta) {
  const double e_min = *std::min_element(energies.begin(), energies.end());
  double z = 0.0, mean = 0.0;
  for (double e : energies) {
    const double w = std::exp(-beta * (e - e_min));
    z += w;
    mean += w * (e - e_min);
  }
  // S = ln Z' + beta <E - E_min>
  return std::log(z) + beta * mean / z;
}

namespace {

void require_nondegenerate(const std::vector<double> &energies) {
  const double spread = energies.back() - energies.front();
  const double scale = std::max({1.0, std::abs(energies.front()), std::abs(energies.back())});
  if (!(spread > 1e-12 * scale)) {
    std::ostringstream msg;
    msg << "all " << energies.size() << " energy levels coincide at " << energies.front();
    throw DegenerateHamiltonian(msg.str());
  }
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

EffectiveTemperature effective_inverse_temperature(const DensityMatrix &rho,
                                                   const HermitianOperator &h) {
  if (rho.dim() != h.dim()) throw DimensionMismatch("effective_inverse_temperature");
  const std::vector<double> energies = eigh(h).eigenvalues;
  require_nondegenerate(energies);

  const double target = von_neumann_entropy(rho);
  const double s_max = std::log(static_cast<double>(rho.dim()));
  if (target > s_max + kEntropyMatchTol) {
    std::ostringstream msg;
    msg << "entropy " << target << " exceeds ln(dim) = " << s_max;
    throw BracketFailure(msg.str());
  }
  if (std::abs(target - s_max) <= kEntropyMatchTol) return {0.0, target - s_max};
  if (target <= kEntropyFloor) return {kInf, 0.0};

  const double beta_max = kBetaMaxScale / (energies.back() - energies.front());
  if (target < gibbs_entropy(energies, beta_max)) return {kInf, 0.0};

  // S(omega^beta) decreases monotonically in beta.
  double lo = 0.0, hi = beta_max;
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (gibbs_entropy(energies, mid) > target)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * hi) break;
  }
  const double beta = 0.5 * (lo + hi);
  return {beta, gibbs_entropy(energies, beta) - target};
}

double asymptotic_ergotropy(const DensityMatrix &rho, const HermitianOperator &h) {
  const EffectiveTemperature eff = effective_inverse_temperature(rho, h);
  if (eff.is_infinite())
    throw PureStateLimit("state entropy is below the Gibbs family at beta_max");
  if (eff.beta_star == 0.0) {
    const double gap = std::log(static_cast<double>(rho.dim())) - von_neumann_entropy(rho);
    if (gap > kSupportTol) {
      std::ostringstream msg;
      msg << "beta* = 0 but S(rho||I/d) = " << gap;
      throw DegenerateEffectiveTemperature(msg.str());
    }
    return 0.0;
  }
  const double value =
      relative_entropy_to_gibbs(rho, h, Temperature(1.0 / eff.beta_star)) / eff.beta_star;
  return value < 0.0 ? 0.0 : value;
}

double excess_ergotropy(const DensityMatrix &rho, const HermitianOperator &h) {
  return asymptotic_ergotropy(rho, h) - ergotropy(rho, h);
}

}  // namespace stherm
