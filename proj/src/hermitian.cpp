#include "stherm/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "stherm/errors.hpp"

namespace stherm {

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    std::ostringstream msg;
    msg << "expected " << dim_ * dim_ << " entries for dimension " << dim_
        << ", got " << entries_.size();
    throw NotSquare(msg.str());
  }
}

ComplexMatrix ComplexMatrix::from_rows(
    const std::vector<std::vector<Complex>> &rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      std::ostringstream msg;
      msg << "row " << r << " has " << rows[r].size() << " entries, expected "
          << n;
      throw NotSquare(msg.str());
    }
    entries.insert(entries.end(), rows[r].begin(), rows[r].end());
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto &z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto &z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
  if (other.dim_ != dim_) throw DimensionMismatch("matrix addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
  if (other.dim_ != dim_) throw DimensionMismatch("matrix subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
  for (auto &z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
  if (lhs.dim_ != rhs.dim_) throw DimensionMismatch("matrix product");
  const std::size_t n = lhs.dim_;
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff");
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix &u, const ComplexMatrix &a) {
  return u * a * u.adjoint();
}

HermitianOperator validate_hermitian(ComplexMatrix m, double tol) {
  const std::size_t n = m.dim();
  double asym = 0.0;
  std::size_t worst_r = 0, worst_c = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      const double d = std::abs(m(r, c) - std::conj(m(c, r)));
      if (d > asym) {
        asym = d;
        worst_r = r;
        worst_c = c;
      }
    }
  if (!(asym <= tol)) {
    std::ostringstream msg;
    msg << "max |A - A^dagger| = " << asym << " at (" << worst_r << ", "
        << worst_c << ") exceeds tolerance " << tol;
    throw NotHermitian(msg.str());
  }
  return hermitian_part(m);
}

HermitianOperator hermitian_part(const ComplexMatrix &m) {
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    out(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex v = 0.5 * (m(r, c) + std::conj(m(c, r)));
      out(r, c) = v;
      out(c, r) = std::conj(v);
    }
  }
  return HermitianOperator(std::move(out));
}

namespace {

double off_diagonal_norm(const ComplexMatrix &a) {
  double s = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Annihilates a(p, q) with the unitary W = diag(1, e^{-i phi}) R(theta),
// applied as A <- W† A W and V <- V W.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p,
                   std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double zeta = (aqq - app) / (2.0 * r);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex w00 = c;
  const Complex w01 = s;
  const Complex w10 = -s * std::conj(phase);
  const Complex w11 = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * w00 + akq * w10;
    a(k, q) = akp * w01 + akq * w11;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(w00) * apk + std::conj(w10) * aqk;
    a(q, k) = std::conj(w01) * apk + std::conj(w11) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * w00 + vkq * w10;
    v(k, q) = vkp * w01 + vkq * w11;
  }
}

}  // namespace

EigenSystem eigh(const HermitianOperator &h) {
  const std::size_t n = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kJacobiOffDiagonalRelTol * a.frobenius_norm();
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep++ >= kJacobiMaxSweeps) {
      std::ostringstream msg;
      msg << "off-diagonal norm " << off_diagonal_norm(a) << " after "
          << kJacobiMaxSweeps << " sweeps (dimension " << n << ")";
      throw ConvergenceFailure(msg.str());
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

HermitianOperator from_spectrum(std::span<const double> values,
                                const ComplexMatrix &eigenvectors) {
  const std::size_t n = eigenvectors.dim();
  if (values.size() != n) throw DimensionMismatch("from_spectrum");
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = values[k];
    if (lam == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = eigenvectors(r, k) * lam;
      if (vr == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) += vr * std::conj(eigenvectors(c, k));
    }
  }
  return hermitian_part(out);
}

HermitianOperator func_of_hermitian(const EigenSystem &eig,
                                    const std::function<double(double)> &f) {
  std::vector<double> mapped(eig.eigenvalues.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    mapped[k] = f(eig.eigenvalues[k]);
    if (!std::isfinite(mapped[k])) {
      std::ostringstream msg;
      msg << "f(" << eig.eigenvalues[k] << ") = " << mapped[k];
      throw NonFiniteResult(msg.str());
    }
  }
  return from_spectrum(mapped, eig.eigenvectors);
}

HermitianOperator func_of_hermitian(const HermitianOperator &h,
                                    const std::function<double(double)> &f) {
  return func_of_hermitian(eigh(h), f);
}

}  // namespace stherm
