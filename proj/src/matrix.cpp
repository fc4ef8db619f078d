#include "pathstate/matrix.hpp"

#include <cmath>

#include "pathstate/errors.hpp"

namespace pathstate {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, cplx(0.0, 0.0)) {
  if (!is_power_of_two(dim)) {
    throw ValidationError("ComplexMatrix: dimension must be a power of two, got " +
                          std::to_string(dim));
  }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (!is_power_of_two(dim)) {
    throw ValidationError("ComplexMatrix: dimension must be a power of two, got " +
                          std::to_string(dim));
  }
  if (entries_.size() != dim * dim) {
    throw ValidationError("ComplexMatrix: entry count " + std::to_string(entries_.size()) +
                          " does not match dim^2 = " + std::to_string(dim * dim));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

int ComplexMatrix::n_qubits() const {
  int n = 0;
  for (std::size_t d = dim_; d > 1; d >>= 1) ++n;
  return n;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const cplx& e : entries_) sum += std::norm(e);
  return std::sqrt(sum);
}

double ComplexMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const { return max_asymmetry() <= tol; }

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw ValidationError("matrix multiply: dimension mismatch");
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx a = (*this)(r, k);
      if (a == cplx(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw ValidationError("matrix add: dimension mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw ValidationError("matrix subtract: dimension mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw ValidationError("matrix add: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix ComplexMatrix::scaled(cplx factor) const {
  ComplexMatrix out = *this;
  for (cplx& e : out.entries_) e *= factor;
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t ra = 0; ra < da; ++ra)
    for (std::size_t ca = 0; ca < da; ++ca) {
      const cplx f = a(ra, ca);
      if (f == cplx(0.0, 0.0)) continue;
      for (std::size_t rb = 0; rb < db; ++rb)
        for (std::size_t cb = 0; cb < db; ++cb)
          out(ra * db + rb, ca * db + cb) = f * b(rb, cb);
    }
  return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("frobenius_distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) sum += std::norm(a.entries()[i] - b.entries()[i]);
  return std::sqrt(sum);
}

}  // namespace pathstate
