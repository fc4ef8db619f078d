#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace pathstate {

using cplx = std::complex<double>;

/// Dense row-major complex matrix over a qubit Hilbert space. The dimension
/// is always a power of two; basis index bit conventions are fixed globally
/// with qubit 0 of the owning register as the most significant bit.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(1), entries_(1, cplx(0.0, 0.0)) {}
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  int n_qubits() const;

  cplx& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  const std::vector<cplx>& entries() const { return entries_; }
  std::vector<cplx>& entries() { return entries_; }

  ComplexMatrix dagger() const;
  cplx trace() const;
  double frobenius_norm() const;
  /// Largest |M - M†| entry; zero for exactly Hermitian matrices.
  double max_asymmetry() const;
  bool is_hermitian(double tol) const;

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix scaled(cplx factor) const;

  bool operator==(const ComplexMatrix& rhs) const = default;

 private:
  std::size_t dim_;
  std::vector<cplx> entries_;
};

/// Kronecker product; `a` supplies the most significant index bits.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// 2-norm distance sqrt(sum |a_ij - b_ij|^2). Dimensions must match.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_power_of_two(std::size_t v);

}  // namespace pathstate
