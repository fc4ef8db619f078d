#include "pathstate/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pathstate/errors.hpp"

namespace pathstate {

namespace {

double offdiagonal_mass(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  double sum = 0.0;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (r != c) sum += std::norm(m(r, c));
  return std::sqrt(sum);
}

}  // namespace

EigResult eig_hermitian(const ComplexMatrix& m) {
  const double asym = m.max_asymmetry();
  if (asym > 1e-8) {
    throw NumericContractError("eig_hermitian: input is not Hermitian (max |M - M^dagger| = " +
                               std::to_string(asym) + ")");
  }

  const std::size_t d = m.dim();
  // Work on the Hermitian average so rounding asymmetry cannot bias rotations.
  ComplexMatrix a(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  ComplexMatrix v = ComplexMatrix::identity(d);

  const double norm = a.frobenius_norm();
  const double threshold = 1e-12 * std::max(norm, 1e-300);
  const int max_sweeps = 128;

  for (int sweep = 0; sweep < max_sweeps && offdiagonal_mass(a) > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // U = [[c, -s e^{i phi}], [s e^{-i phi}, c]] zeroes A'[p][q] when
        // tan(2 theta) = 2|apq| / (app - aqq).
        const double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const cplx phase = apq / mag;
        const cplx se_pos = s * phase;             // s e^{i phi}
        const cplx se_neg = s * std::conj(phase);  // s e^{-i phi}

        for (std::size_t r = 0; r < d; ++r) {  // column update: A <- A U
          const cplx arp = a(r, p);
          const cplx arq = a(r, q);
          a(r, p) = c * arp + se_neg * arq;
          a(r, q) = -se_pos * arp + c * arq;
        }
        for (std::size_t col = 0; col < d; ++col) {  // row update: A <- U^dagger A
          const cplx apc = a(p, col);
          const cplx aqc = a(q, col);
          a(p, col) = c * apc + se_pos * aqc;
          a(q, col) = -se_neg * apc + c * aqc;
        }
        for (std::size_t r = 0; r < d; ++r) {  // accumulate V <- V U
          const cplx vrp = v(r, p);
          const cplx vrq = v(r, q);
          v(r, p) = c * vrp + se_neg * vrq;
          v(r, q) = -se_pos * vrp + c * vrq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  if (offdiagonal_mass(a) > threshold) {
    throw NumericContractError("eig_hermitian: Jacobi sweeps failed to converge");
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigResult result;
  result.eigenvalues.resize(d);
  result.eigenvectors = ComplexMatrix(d);
  for (std::size_t i = 0; i < d; ++i) {
    result.eigenvalues[i] = a(order[i], order[i]).real();
    for (std::size_t r = 0; r < d; ++r) result.eigenvectors(r, i) = v(r, order[i]);
  }
  return result;
}

}  // namespace pathstate
