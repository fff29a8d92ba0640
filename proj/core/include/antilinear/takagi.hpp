#pragma once

#include "antilinear/types.hpp"

namespace antilinear {

/// A = U diag(sigma) U^T with U unitary and sigma descending.
struct TakagiFactorization {
  CMatrix u;
  RVector sigma;
};

/// Autonne-Takagi factorization of a complex symmetric matrix.
///
/// Built from the eigendecomposition of A A^*: within each eigenvalue cluster
/// the restricted block U_c^* A conj(U_c) is a scaled unitary symmetric
/// matrix, which is brought to diagonal form by a real orthogonal rotation
/// followed by a square-root phase correction. Throws ValidationError for
/// non-symmetric input.
TakagiFactorization takagi(const CMatrix& a, double tol_cluster = 1e-8);

}  // namespace antilinear
