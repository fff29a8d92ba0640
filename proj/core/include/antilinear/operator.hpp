#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "antilinear/poly.hpp"
#include "antilinear/spectral_data.hpp"
#include "antilinear/types.hpp"

namespace antilinear {

inline constexpr double kDefaultTolCluster = 1e-8;
inline constexpr double kDefaultTolWeight = 1e-14;
inline constexpr double kDefaultTolBreakdown = 1e-11;

/// Symmetric anti-linear operator B x = A conj(x) with A = A^T, together
/// with a distinguished unit vector (the cyclic vector, e_0 unless given).
class AntiLinearOperator {
 public:
  /// Entrywise symmetry tolerance, relative to max(1, max |A_ij|).
  static constexpr double kSymmetryTolerance = 1e-12;

  explicit AntiLinearOperator(CMatrix matrix);
  AntiLinearOperator(CMatrix matrix, CVector cyclic);

  const CMatrix& matrix() const noexcept { return matrix_; }
  const CVector& cyclic() const noexcept { return cyclic_; }
  Index dim() const noexcept { return matrix_.rows(); }

 private:
  CMatrix matrix_;
  CVector cyclic_;
};

/// Jacobi parameters: off-diagonal a (positive, length n-1) and complex
/// diagonal b (length n).
struct JacobiParameters {
  std::vector<double> a;
  std::vector<Complex> b;

  std::size_t size() const noexcept { return b.size(); }
};

/// Run of equal |B| eigenvalues: indices [begin, begin + size) in ascending order.
struct EigenCluster {
  Index begin = 0;
  Index size = 0;
  double value = 0.0;
};

/// Spectral decomposition of |B| = sqrt(B^2).
struct ModulusSpectrum {
  RVector eigenvalues;   // ascending, nonnegative
  CMatrix eigenvectors;  // orthonormal columns
  std::vector<EigenCluster> clusters;
};

struct ExtractOptions {
  double tol_cluster = kDefaultTolCluster;
  double tol_weight = kDefaultTolWeight;
  /// Reject |B| clusters of multiplicity > 2 at nonzero values.
  bool assert_cyclic = true;
};

struct LanczosResult {
  JacobiParameters params;
  CMatrix basis;  // columns v_0 .. v_{m-1}
  /// True when the Krylov space was exhausted before max_steps.
  bool breakdown = false;
};

/// B x = A conj(x).
CVector apply(const AntiLinearOperator& op, const CVector& x);

/// B^2 = A conj(A), Hermitian positive semi-definite.
CMatrix square(const AntiLinearOperator& op);

ModulusSpectrum modulus_spectrum(const AntiLinearOperator& op,
                                 double tol_cluster = kDefaultTolCluster);

/// Spectral data (nu, psi) of the operator at its cyclic vector.
SpectralData extract_spectral_data(const AntiLinearOperator& op, const ExtractOptions& opts = {});

/// Anti-linear Lanczos with full reorthogonalization, started from the cyclic
/// vector. max_steps bounds the number of basis vectors; 0 means dim().
LanczosResult lanczos_tridiagonalize(const AntiLinearOperator& op, std::size_t max_steps = 0,
                                     double tol_breakdown = kDefaultTolBreakdown);

/// Leading n x n section of the Jacobi matrix, as an operator with cyclic e_0.
AntiLinearOperator jacobi_to_operator(const JacobiParameters& params, std::size_t n);
AntiLinearOperator jacobi_to_operator(const JacobiParameters& params);

/// Max |<Bx, y> - <By, x>| over all basis pairs and `samples` random unit
/// pairs. Accepts non-symmetric matrices, which is the point.
double check_symmetry(const CMatrix& matrix, int samples = 16, std::uint64_t seed = 0x5eed);
double check_symmetry(const AntiLinearOperator& op, int samples = 16, std::uint64_t seed = 0x5eed);

/// Largest singular value of A.
double operator_norm(const AntiLinearOperator& op);

/// p(B) x = sum_k c_k B^k x for the anti-linear B.
CVector apply_polynomial(const AntiLinearOperator& op, const ComplexPolynomial& p, const CVector& x);

}  // namespace antilinear
