#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stherm/hermitian.hpp"

namespace stherm {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueClamp = 1e-12;
inline constexpr double kSupportTol = 1e-12;
inline constexpr double kBlockTol = 1e-10;
inline constexpr double kProbabilityTol = 1e-10;

// Strictly positive, finite temperature in energy units (k_B = 1).
class Temperature {
 public:
  // Throws InvalidTemperature.
  explicit Temperature(double value);

  double value() const noexcept { return value_; }
  double beta() const noexcept { return 1.0 / value_; }

  friend bool operator==(Temperature, Temperature) = default;

 private:
  double value_;
};

// Unit-trace positive-semidefinite operator. The spectrum is computed once at
// construction; eigenvalues in [-kEigenvalueClamp, 0) are stored as 0.
class DensityMatrix {
 public:
  // Throws InvalidDensityMatrix for trace or positivity violations.
  explicit DensityMatrix(HermitianOperator op);

  const HermitianOperator &op() const noexcept { return op_; }
  const ComplexMatrix &matrix() const noexcept { return op_.matrix(); }
  std::size_t dim() const noexcept { return op_.dim(); }
  // Ascending, clamped.
  const std::vector<double> &spectrum() const noexcept { return spectrum_; }
  // Real parts of the diagonal in the working basis.
  std::vector<double> populations() const;

  static DensityMatrix maximally_mixed(std::size_t dim);
  // |index><index|
  static DensityMatrix basis_state(std::size_t dim, std::size_t index);
  static DensityMatrix from_populations(std::span<const double> populations);

 private:
  HermitianOperator op_;
  std::vector<double> spectrum_;
};

// Partition of {0..dim-1} into ordered, disjoint, non-empty index sets.
class SectorDecomposition {
 public:
  // Throws InvalidSectorDecomposition naming the violated invariant.
  SectorDecomposition(std::size_t dim, std::vector<std::vector<std::size_t>> sectors);

  static SectorDecomposition trivial(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return sectors_.size(); }
  const std::vector<std::size_t> &sector(std::size_t i) const;
  const std::vector<std::vector<std::size_t>> &sectors() const noexcept {
    return sectors_;
  }
  // Sector containing basis index `index`.
  std::size_t sector_of(std::size_t index) const { return owner_.at(index); }
  ComplexMatrix projector(std::size_t i) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<std::size_t>> sectors_;
  std::vector<std::size_t> owner_;
};

// Hamiltonian plus the symmetry sectors it must not couple.
class ThermalModel {
 public:
  // Throws DimensionMismatch, or NotBlockDiagonal when some |H[a,b]| with a,
  // b in different sectors exceeds kBlockTol.
  ThermalModel(HermitianOperator hamiltonian, SectorDecomposition sectors);

  const HermitianOperator &hamiltonian() const noexcept { return hamiltonian_; }
  const SectorDecomposition &sectors() const noexcept { return sectors_; }
  std::size_t dim() const noexcept { return hamiltonian_.dim(); }

  // H restricted to the rows/columns of sector i.
  HermitianOperator sector_hamiltonian(std::size_t i) const;

 private:
  HermitianOperator hamiltonian_;
  SectorDecomposition sectors_;
};

// e^{-βH}/Z with weights exp(-β(E - E_min)).
DensityMatrix gibbs_state(const HermitianOperator &h, Temperature temp);

// ln Tr e^{-βH}, overflow-safe.
double log_partition_function(const HermitianOperator &h, Temperature temp);
double log_partition_function(std::span<const double> energies, Temperature temp);

// Gibbs state of the Hamiltonian restricted to sector i, embedded in the
// full space (zero outside the sector). Throws InvalidSector.
DensityMatrix sector_gibbs(const ThermalModel &model, std::size_t sector_index,
                           Temperature temp);

// p_i = Tr(P_i rho0).
std::vector<double> sector_probabilities(const DensityMatrix &rho0,
                                         const SectorDecomposition &sectors);

// rho_SS = sum_i p_i omega_i^beta with p_i taken from rho0.
DensityMatrix s_thermalize(const ThermalModel &model, const DensityMatrix &rho0,
                           Temperature temp);

// -sum λ ln λ over the clamped spectrum, nats.
double von_neumann_entropy(const DensityMatrix &rho);

// S(rho||sigma) = -S(rho) - Tr(rho ln sigma) through the eigenbasis of sigma.
// Throws SupportViolation when sigma has an eigenvalue <= kSupportTol in a
// direction where rho carries weight > kSupportTol.
double relative_entropy(const DensityMatrix &rho, const DensityMatrix &sigma);

// S(rho||omega^beta) = -S(rho) + β Tr(H rho) + ln Z_β. Closed form, valid for
// every finite temperature, so no support check is needed.
double relative_entropy_to_gibbs(const DensityMatrix &rho,
                                 const HermitianOperator &h, Temperature temp);

double internal_energy(const DensityMatrix &rho, const HermitianOperator &h);

// F = E - S/β.
double free_energy(const DensityMatrix &rho, const HermitianOperator &h,
                   Temperature temp);

// Throws NotAProbabilityVector.
double shannon_entropy(std::span<const double> p);

// 0.5 * sum |eigenvalues(a - b)|.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

}  // namespace stherm
