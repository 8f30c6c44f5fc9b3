#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace stherm {

using Complex = std::complex<double>;

inline constexpr double kHermiticityTol = 1e-10;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalRelTol = 1e-14;

// Dense square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  // Throws NotSquare unless entries.size() == dim * dim.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  // Throws NotSquare for ragged or non-square input.
  static ComplexMatrix from_rows(const std::vector<std::vector<Complex>> &rows);
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex &operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex &operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix &operator+=(const ComplexMatrix &other);
  ComplexMatrix &operator-=(const ComplexMatrix &other);
  ComplexMatrix &operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) {
    return lhs *= scale;
  }
  friend ComplexMatrix operator*(const ComplexMatrix &lhs,
                                 const ComplexMatrix &rhs);

  bool operator==(const ComplexMatrix &) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// max_{ij} |a_ij - b_ij|; throws DimensionMismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

// Kronecker product a ⊗ b with a as the slow (major) index.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

class HermitianOperator;

// Accepts m iff max|m - m†| <= tol; the stored matrix is (m + m†)/2 so that
// the diagonal is exactly real. Throws NotHermitian with the max asymmetry.
HermitianOperator validate_hermitian(ComplexMatrix m,
                                     double tol = kHermiticityTol);

// (m + m†)/2 without checking. For matrices that are Hermitian by
// construction up to round-off (products like V f(Λ) V†).
HermitianOperator hermitian_part(const ComplexMatrix &m);

class HermitianOperator {
 public:
  HermitianOperator() = default;

  const ComplexMatrix &matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  // Diagonal entries are real by construction.
  double diagonal(std::size_t i) const { return matrix_(i, i).real(); }

  bool operator==(const HermitianOperator &) const = default;

 private:
  explicit HermitianOperator(ComplexMatrix m) : matrix_(std::move(m)) {}

  friend HermitianOperator validate_hermitian(ComplexMatrix m, double tol);
  friend HermitianOperator hermitian_part(const ComplexMatrix &m);

  ComplexMatrix matrix_;
};

struct EigenSystem {
  std::vector<double> eigenvalues;  // non-decreasing
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

// Cyclic complex Jacobi. Deterministic; throws ConvergenceFailure when the
// off-diagonal Frobenius norm has not dropped below
// kJacobiOffDiagonalRelTol * ||A||_F after kJacobiMaxSweeps sweeps.
EigenSystem eigh(const HermitianOperator &h);

// V diag(values) V†.
HermitianOperator from_spectrum(std::span<const double> values,
                                const ComplexMatrix &eigenvectors);

// V f(Λ) V†. Throws NonFiniteResult if f is not finite on some eigenvalue.
HermitianOperator func_of_hermitian(const EigenSystem &eig,
                                    const std::function<double(double)> &f);
HermitianOperator func_of_hermitian(const HermitianOperator &h,
                                    const std::function<double(double)> &f);

// Conjugation u a u†.
ComplexMatrix conjugate(const ComplexMatrix &u, const ComplexMatrix &a);

}  // namespace stherm
