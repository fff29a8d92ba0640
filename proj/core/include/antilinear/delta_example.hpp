#pragma once

#include <cstddef>
#include <optional>

#include "antilinear/operator.hpp"
#include "antilinear/spectral_data.hpp"
#include "antilinear/types.hpp"

/// Closed forms for the free Jacobi matrix with a complex delta potential at
/// site 0: b_n = omega * delta_{n0}, a_n = 1.
namespace antilinear::delta {

/// Density of the absolutely continuous part of nu on [0, 2].
double density(double s, Complex omega);

struct Atom {
  double location = 0.0;
  double weight = 0.0;
  Complex phase;
};

/// Point mass of nu, present iff |omega| > 1.
std::optional<Atom> atom(Complex omega);

/// psi(s) = omega s / (1 + |omega|^2) on [0, 2].
Complex phase(double s, Complex omega);

enum class Quadrature {
  /// Gauss-Legendre in the angle s = 2 cos(phi); absorbs the sqrt(4 - s^2)
  /// edge, exact enough for |omega| = 1 where the density blows up at s = 2.
  chebyshev,
  /// Plain Gauss-Legendre on [0, 2].
  legendre,
};

struct Discretization {
  SpectralData data;
  /// Total quadrature mass before renormalisation (atom included).
  double renormalization = 1.0;
};

/// Finite spectral data approximating (nu, psi) with M quadrature nodes plus
/// the atom. Throws NumericError if the raw mass is off by more than 1e-3.
Discretization discretize(Complex omega, int quadrature_nodes,
                          Quadrature rule = Quadrature::chebyshev);

/// Entries (0,0) and (0,1) of (2 + xi + 1/xi - J J^*)^{-1}, 0 < |xi| < 1.
Complex resolvent_00(Complex xi, Complex omega);
Complex resolvent_01(Complex xi, Complex omega);

/// Cauchy-Stieltjes transforms at z = xi + 1/xi of the even extension of nu
/// and of s psi^o(s) d nu^e(s).
Complex cauchy_nu(Complex xi, Complex omega);
Complex cauchy_psi(Complex xi, Complex omega);

/// The same transforms as finite sums over spectral data, symmetrised on the
/// fly: sum_j w_j z / (z^2 - s_j^2) and sum_j w_j s_j psi_j z / (z^2 - s_j^2).
Complex cauchy_nu_sum(Complex xi, const SpectralData& data);
Complex cauchy_psi_sum(Complex xi, const SpectralData& data);

/// q_n(s) through the Chebyshev T/U representation. Falls back to the value
/// recurrence when |2 - s^2| < 1e-6 (removable singularity).
Complex chebyshev_q(int n, double s, Complex omega);

/// Jacobi parameters of J(omega) for n sites (a has n entries so the
/// recurrence can reach q_n).
JacobiParameters parameters(Complex omega, std::size_t n);

/// N x N section of J(omega).
AntiLinearOperator build_truncated_J(Complex omega, int n);

/// Entry (row, col) of (2 + xi + 1/xi - J_N J_N^*)^{-1} for the N x N
/// section, by a banded LU solve.
Complex truncated_resolvent(Complex xi, Complex omega, int n, int row, int col);

}  // namespace antilinear::delta
