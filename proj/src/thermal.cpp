#include "stherm/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "stherm/errors.hpp"

namespace stherm {

Temperature::Temperature(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "temperature must be positive and finite, got " << value;
    throw InvalidTemperature(msg.str());
  }
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  const double tr = op_.matrix().trace().real();
  if (!(std::abs(tr - 1.0) <= kTraceTol)) {
    std::ostringstream msg;
    msg << "trace " << tr << " differs from 1 by more than " << kTraceTol;
    throw InvalidDensityMatrix(msg.str());
  }
  spectrum_ = eigh(op_).eigenvalues;
  for (double &lam : spectrum_) {
    if (lam < -kEigenvalueClamp) {
      std::ostringstream msg;
      msg << "negative eigenvalue " << lam;
      throw InvalidDensityMatrix(msg.str());
    }
    if (lam < 0.0) lam = 0.0;
  }
}

std::vector<double> DensityMatrix::populations() const {
  std::vector<double> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = op_.diagonal(i);
  return out;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  std::vector<double> p(dim, 1.0 / static_cast<double>(dim));
  return from_populations(p);
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t index) {
  std::vector<double> p(dim, 0.0);
  p.at(index) = 1.0;
  return from_populations(p);
}

DensityMatrix DensityMatrix::from_populations(std::span<const double> populations) {
  return DensityMatrix(hermitian_part(ComplexMatrix::diagonal(populations)));
}

SectorDecomposition::SectorDecomposition(
    std::size_t dim, std::vector<std::vector<std::size_t>> sectors)
    : dim_(dim), sectors_(std::move(sectors)), owner_(dim, dim) {
  if (dim_ == 0) throw InvalidSectorDecomposition("dimension must be positive");
  for (std::size_t s = 0; s < sectors_.size(); ++s) {
    if (sectors_[s].empty()) {
      std::ostringstream msg;
      msg << "sector " << s << " is empty";
      throw InvalidSectorDecomposition(msg.str());
    }
    for (std::size_t idx : sectors_[s]) {
      if (idx >= dim_) {
        std::ostringstream msg;
        msg << "sector " << s << " contains index " << idx
            << " outside dimension " << dim_;
        throw InvalidSectorDecomposition(msg.str());
      }
      if (owner_[idx] != dim_) {
        std::ostringstream msg;
        msg << "overlapping sectors: index " << idx << " appears in sectors "
            << owner_[idx] << " and " << s;
        throw InvalidSectorDecomposition(msg.str());
      }
      owner_[idx] = s;
    }
  }
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    if (owner_[idx] == dim_) {
      std::ostringstream msg;
      msg << "incomplete partition: index " << idx << " is in no sector";
      throw InvalidSectorDecomposition(msg.str());
    }
  }
}

SectorDecomposition SectorDecomposition::trivial(std::size_t dim) {
  std::vector<std::size_t> all(dim);
  std::iota(all.begin(), all.end(), 0);
  return SectorDecomposition(dim, {all});
}

const std::vector<std::size_t> &SectorDecomposition::sector(std::size_t i) const {
  if (i >= sectors_.size()) {
    std::ostringstream msg;
    msg << "sector index " << i << " out of range (" << sectors_.size()
        << " sectors)";
    throw InvalidSector(msg.str());
  }
  return sectors_[i];
}

ComplexMatrix SectorDecomposition::projector(std::size_t i) const {
  ComplexMatrix p(dim_);
  for (std::size_t idx : sector(i)) p(idx, idx) = 1.0;
  return p;
}

ThermalModel::ThermalModel(HermitianOperator hamiltonian,
                           SectorDecomposition sectors)
    : hamiltonian_(std::move(hamiltonian)), sectors_(std::move(sectors)) {
  if (hamiltonian_.dim() != sectors_.dim()) {
    std::ostringstream msg;
    msg << "Hamiltonian dimension " << hamiltonian_.dim()
        << " but sectors cover dimension " << sectors_.dim();
    throw DimensionMismatch(msg.str());
  }
  const auto &h = hamiltonian_.matrix();
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a + 1; b < dim(); ++b) {
      if (sectors_.sector_of(a) == sectors_.sector_of(b)) continue;
      if (std::abs(h(a, b)) > kBlockTol) {
        std::ostringstream msg;
        msg << "cross-sector coupling |H[" << a << "," << b
            << "]| = " << std::abs(h(a, b)) << " exceeds " << kBlockTol;
        throw NotBlockDiagonal(msg.str());
      }
    }
}

HermitianOperator ThermalModel::sector_hamiltonian(std::size_t i) const {
  const auto &idx = sectors_.sector(i);
  ComplexMatrix sub(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      sub(r, c) = hamiltonian_.matrix()(idx[r], idx[c]);
  return hermitian_part(sub);
}

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": dimensions " << a << " and " << b;
    throw DimensionMismatch(msg.str());
  }
}

// Normalized e^{-βH} as a bare matrix, shifted by the ground energy.
HermitianOperator gibbs_operator(const HermitianOperator &h, Temperature temp) {
  const EigenSystem eig = eigh(h);
  const double e_min = eig.eigenvalues.front();
  std::vector<double> weights(eig.eigenvalues.size());
  for (std::size_t k = 0; k < weights.size(); ++k)
    weights[k] = std::exp(-temp.beta() * (eig.eigenvalues[k] - e_min));
  const double z = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double &w : weights) w /= z;
  return from_spectrum(weights, eig.eigenvectors);
}

// Sector Gibbs block embedded in the full space.
ComplexMatrix embedded_sector_gibbs(const ThermalModel &model, std::size_t i,
                                    Temperature temp) {
  const auto &idx = model.sectors().sector(i);
  const HermitianOperator block = gibbs_operator(model.sector_hamiltonian(i), temp);
  ComplexMatrix out(model.dim());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      out(idx[r], idx[c]) = block.matrix()(r, c);
  return out;
}

}  // namespace

DensityMatrix gibbs_state(const HermitianOperator &h, Temperature temp) {
  return DensityMatrix(gibbs_operator(h, temp));
}

double log_partition_function(std::span<const double> energies, Temperature temp) {
  const double e_min = *std::min_element(energies.begin(), energies.end());
  double sum = 0.0;
  for (double e : energies) sum += std::exp(-temp.beta() * (e - e_min));
  return -temp.beta() * e_min + std::log(sum);
}

double log_partition_function(const HermitianOperator &h, Temperature temp) {
  return log_partition_function(eigh(h).eigenvalues, temp);
}

DensityMatrix sector_gibbs(const ThermalModel &model, std::size_t sector_index,
                           Temperature temp) {
  return DensityMatrix(hermitian_part(embedded_sector_gibbs(model, sector_index, temp)));
}

std::vector<double> sector_probabilities(const DensityMatrix &rho0,
                                         const SectorDecomposition &sectors) {
  require_same_dim(rho0.dim(), sectors.dim(), "sector_probabilities");
  std::vector<double> p(sectors.size(), 0.0);
  for (std::size_t s = 0; s < sectors.size(); ++s) {
    for (std::size_t idx : sectors.sector(s)) p[s] += rho0.op().diagonal(idx);
    if (p[s] < 0.0 && p[s] >= -kEigenvalueClamp) p[s] = 0.0;
  }
  return p;
}

DensityMatrix s_thermalize(const ThermalModel &model, const DensityMatrix &rho0,
                           Temperature temp) {
  require_same_dim(rho0.dim(), model.dim(), "s_thermalize");
  const std::vector<double> p = sector_probabilities(rho0, model.sectors());
  ComplexMatrix out(model.dim());
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s] == 0.0) continue;
    out += embedded_sector_gibbs(model, s, temp) * Complex{p[s], 0.0};
  }
  return DensityMatrix(hermitian_part(out));
}

double von_neumann_entropy(const DensityMatrix &rho) {
  double s = 0.0;
  for (double lam : rho.spectrum())
    if (lam > 0.0) s -= lam * std::log(lam);
  return s;
}

namespace {

double clamp_tiny_negative(double value) {
  return (value < 0.0 && value > -1e-10) ? 0.0 : value;
}

}  // namespace

double relative_entropy(const DensityMatrix &rho, const DensityMatrix &sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "relative_entropy");
  const EigenSystem eig = eigh(sigma.op());
  const std::size_t n = rho.dim();
  const auto &r = rho.matrix();
  double cross = 0.0;  // Tr(rho ln sigma)
  for (std::size_t k = 0; k < n; ++k) {
    Complex w = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      Complex row = 0.0;
      for (std::size_t b = 0; b < n; ++b) row += r(a, b) * eig.eigenvectors(b, k);
      w += std::conj(eig.eigenvectors(a, k)) * row;
    }
    const double weight = w.real();
    const double mu = eig.eigenvalues[k];
    if (mu <= kSupportTol) {
      if (weight > kSupportTol) {
        std::ostringstream msg;
        msg << "sigma eigenvalue " << mu << " where rho has weight " << weight;
        throw SupportViolation(msg.str());
      }
      continue;
    }
    cross += weight * std::log(mu);
  }
  return clamp_tiny_negative(-von_neumann_entropy(rho) - cross);
}

double relative_entropy_to_gibbs(const DensityMatrix &rho,
                                 const HermitianOperator &h, Temperature temp) {
  require_same_dim(rho.dim(), h.dim(), "relative_entropy_to_gibbs");
  const std::vector<double> energies = eigh(h).eigenvalues;
  const double e_min = energies.front();
  double sum = 0.0;
  for (double e : energies) sum += std::exp(-temp.beta() * (e - e_min));
  // β(E(rho) - E_min) + ln Σ e^{-β(E - E_min)} = βE(rho) + ln Z.
  const double value = temp.beta() * (internal_energy(rho, h) - e_min) +
                       std::log(sum) - von_neumann_entropy(rho);
  return clamp_tiny_negative(value);
}

double internal_energy(const DensityMatrix &rho, const HermitianOperator &h) {
  require_same_dim(rho.dim(), h.dim(), "internal_energy");
  const auto &a = h.matrix();
  const auto &b = rho.matrix();
  double e = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) e += (a(r, c) * b(c, r)).real();
  return e;
}

double free_energy(const DensityMatrix &rho, const HermitianOperator &h,
                   Temperature temp) {
  return internal_energy(rho, h) - von_neumann_entropy(rho) * temp.value();
}

double shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= -kProbabilityTol)) {
      std::ostringstream msg;
      msg << "entry " << i << " = " << p[i] << " is negative";
      throw NotAProbabilityVector(msg.str());
    }
    total += p[i];
  }
  if (p.empty() || !(std::abs(total - 1.0) <= kProbabilityTol)) {
    std::ostringstream msg;
    msg << "entries sum to " << total;
    throw NotAProbabilityVector(msg.str());
  }
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
  require_same_dim(a.dim(), b.dim(), "trace_distance");
  const EigenSystem eig = eigh(hermitian_part(a.matrix() - b.matrix()));
  double s = 0.0;
  for (double lam : eig.eigenvalues) s += std::abs(lam);
  return 0.5 * s;
}

}  // namespace stherm
