#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "stherm/thermal.hpp"

namespace stherm::testing {

inline ThermalModel fig2_model() {
  const std::vector<double> energies{0.0, 0.1, 0.2, 1.0};
  return ThermalModel(validate_hermitian(ComplexMatrix::diagonal(energies)),
                      SectorDecomposition(4, {{0, 2}, {1, 3}}));
}

inline ThermalModel fig2_single_sector() {
  const std::vector<double> energies{0.0, 0.1, 0.2, 1.0};
  return ThermalModel(validate_hermitian(ComplexMatrix::diagonal(energies)),
                      SectorDecomposition::trivial(4));
}

// Entries with real and imaginary parts uniform in [-1, 1].
inline HermitianOperator random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = u(rng);
    for (std::size_t c = r + 1; c < dim; ++c) {
      m(r, c) = Complex{u(rng), u(rng)};
      m(c, r) = std::conj(m(r, c));
    }
  }
  return validate_hermitian(m);
}

// Random full-rank density matrix G G† / Tr(G G†).
inline DensityMatrix random_density(std::size_t dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = Complex{n(rng), n(rng)};
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex{1.0 / rho.trace().real(), 0.0};
  return DensityMatrix(hermitian_part(rho));
}

// Random sector partition of `dim` indices into `num_sectors` non-empty sets
// and a Hamiltonian that is block diagonal with respect to it.
inline ThermalModel random_block_model(std::size_t dim, std::size_t num_sectors,
                                       std::mt19937_64 &rng) {
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<std::size_t>> sectors(num_sectors);
  for (std::size_t k = 0; k < dim; ++k) sectors[k < num_sectors ? k : rng() % num_sectors].push_back(perm[k]);
  for (auto &s : sectors) std::sort(s.begin(), s.end());

  const HermitianOperator full = random_hermitian(dim, rng);
  ComplexMatrix h(dim);
  for (const auto &s : sectors)
    for (std::size_t a : s)
      for (std::size_t b : s) h(a, b) = full.matrix()(a, b);
  return ThermalModel(validate_hermitian(h), SectorDecomposition(dim, sectors));
}

inline ComplexMatrix permutation_matrix(const std::vector<std::size_t> &perm) {
  ComplexMatrix p(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) p(perm[i], i) = 1.0;
  return p;
}

}  // namespace stherm::testing
