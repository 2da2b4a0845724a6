#pragma once

#include <vector>

#include "wyur/matrix.hpp"

namespace wyur {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kEigenResidualTol = 1e-10;
inline constexpr double kSqrtClampTol = 1e-10;

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input is first symmetrized as (M + M†)/2. Sweeps stop once the
/// off-diagonal Frobenius mass drops to 1e-14·‖M‖_F; more than 100 sweeps
/// raises NoConvergence. The reconstruction residual ‖M - VΛV†‖_max is
/// checked against tol·max(1, ‖M‖_max).
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol = kEigenResidualTol);

/// Principal square root V·diag(√λ)·V† of a positive semidefinite matrix.
/// Eigenvalues in [-clamp_tol, 0) are clamped to zero; anything lower raises
/// NegativeEigenvalue.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double clamp_tol = kSqrtClampTol);

}  // namespace wyur
