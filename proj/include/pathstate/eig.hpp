#pragma once

#include <vector>

#include "pathstate/matrix.hpp"

namespace pathstate {

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column i pairs with eigenvalues[i]
};

/// Hermitian eigendecomposition by cyclic Jacobi sweeps of complex 2x2
/// rotations. Converges when the off-diagonal Frobenius mass drops below
/// 1e-12 * ||M||_F. Input must be Hermitian to 1e-8; equal eigenvalues carry
/// no ordering guarantee beyond the ascending sort.
EigResult eig_hermitian(const ComplexMatrix& m);

}  // namespace pathstate
