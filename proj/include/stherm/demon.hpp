#pragma once

#include <cstddef>
#include <vector>

#include "stherm/thermal.hpp"

namespace stherm {

// Ancilla register with one fiducial level (0) plus one level per sector;
// sector i is recorded on level i + 1.
class RegisterSpec {
 public:
  // Throws SpecMismatch when num_sectors == 0.
  explicit RegisterSpec(std::size_t num_sectors);

  std::size_t num_sectors() const noexcept { return num_sectors_; }
  std::size_t dim() const noexcept { return num_sectors_ + 1; }
  static constexpr std::size_t fiducial() noexcept { return 0; }
  std::size_t level_of(std::size_t sector) const noexcept { return sector + 1; }

 private:
  std::size_t num_sectors_;
};

// Density matrix on system ⊗ register, system-major: index = s * dim_reg + k.
struct CompositeState {
  DensityMatrix state;
  std::size_t system_dim;
  std::size_t register_dim;
};

// rho ⊗ |0><0|
CompositeState attach_register(const DensityMatrix &rho, const RegisterSpec &reg);

// U = sum_n P_n ⊗ (|n+1><0| + |0><n+1| + sum_{k != 0, n+1} |k><k|).
// Throws SpecMismatch when the register does not match the sector count.
ComplexMatrix correlate_unitary(const SectorDecomposition &sectors, const RegisterSpec &reg);

CompositeState apply_unitary(const CompositeState &composite, const ComplexMatrix &u);

// Projective measurement of the register in its level basis, summed over
// outcomes: sum_k (I ⊗ |k><k|) rho (I ⊗ |k><k|).
CompositeState measure_register(const CompositeState &composite);

// Correlate rho0 ⊗ |0><0| with U and measure the register.
CompositeState demon_measure(const DensityMatrix &rho0, const SectorDecomposition &sectors,
                             const RegisterSpec &reg);

// Full demon map: measure, then on outcome level i+1 replace the system
// branch with omega_i^beta. Output sum_i p_i omega_i^beta ⊗ |i+1><i+1|.
CompositeState demon_channel(const ThermalModel &model, const DensityMatrix &rho0,
                             Temperature temp, const RegisterSpec &reg);

// Applies U_R = U†.
CompositeState reset_unitary_path(const CompositeState &composite,
                                  const SectorDecomposition &sectors, const RegisterSpec &reg);

// omega^beta ⊗ Tr_sys(composite).
CompositeState landauer_erase(const CompositeState &composite, const ThermalModel &model,
                              Temperature temp);

// Tr_reg(composite) ⊗ |0><0|.
CompositeState register_reset(const CompositeState &composite, const RegisterSpec &reg);

DensityMatrix system_marginal(const CompositeState &composite);
DensityMatrix register_marginal(const CompositeState &composite);

// S(sys) + S(reg) - S(sys, reg).
double mutual_information(const CompositeState &composite);

struct RegisterBranch {
  std::size_t level;
  double probability;
  DensityMatrix system_state;  // conditional, normalized
};

// Conditional system states for every register level with non-zero weight.
// Meaningful for register-diagonal composites (after measurement).
std::vector<RegisterBranch> register_branches(const CompositeState &composite);

// sum_k p_k S(rho_k) over register_branches.
double branch_entropy_average(const CompositeState &composite);

}  // namespace stherm
