#include "antilinear/takagi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "antilinear/error.hpp"

namespace antilinear {

namespace {

// Irrational mixing weight for simultaneous diagonalization of Re K and Im K.
constexpr double kMix = 0.7390851332151607;

// Columns of `basis` span an A conj(.)-invariant subspace on which A A^* acts
// as sigma^2. Rotates them so that A conj(u_k) = sigma u_k for every column.
void fix_cluster(const CMatrix& a, double sigma, Eigen::Ref<CMatrix> basis) {
  const Index k = basis.cols();
  const CMatrix s = basis.adjoint() * a * basis.conjugate();
  if (k == 1) {
    basis.col(0) *= std::polar(1.0, 0.5 * std::arg(s(0, 0)));
    return;
  }
  // K = S / sigma is unitary and symmetric, so Re K and Im K are commuting
  // real symmetric matrices with a common orthogonal eigenbasis.
  const CMatrix kmat = (s + s.transpose()) * (0.5 / sigma);
  const Eigen::MatrixXd mixed = kmat.real() + kMix * kmat.imag();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mixed);
  if (solver.info() != Eigen::Success) throw NumericError("takagi: cluster rotation failed");
  const CMatrix q = solver.eigenvectors().cast<Complex>();
  const CMatrix d = q.transpose() * kmat * q;
  CMatrix w = q;
  for (Index j = 0; j < k; ++j) w.col(j) *= std::polar(1.0, 0.5 * std::arg(d(j, j)));
  basis = (basis * w).eval();
}

}  // namespace

TakagiFactorization takagi(const CMatrix& a, double tol_cluster) {
  if (a.rows() == 0 || a.rows() != a.cols()) throw ValidationError("takagi: matrix must be square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ValidationError("takagi: matrix is not symmetric");

  const Index n = a.rows();
  CMatrix h = a * a.adjoint();
  h = (h + h.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw NumericError("takagi: eigen-solver failed");

  // Descending order.
  TakagiFactorization out;
  out.sigma.resize(n);
  out.u.resize(n, n);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(n) *
                       std::max(solver.eigenvalues()[n - 1], 0.0);
  for (Index i = 0; i < n; ++i) {
    const double lambda = solver.eigenvalues()[n - 1 - i];
    out.sigma[i] = lambda <= floor ? 0.0 : std::sqrt(lambda);
    out.u.col(i) = solver.eigenvectors().col(n - 1 - i);
  }

  const double gap = tol_cluster * (1.0 + out.sigma[0]);
  Index begin = 0;
  for (Index i = 1; i <= n; ++i) {
    if (i < n && out.sigma[i - 1] - out.sigma[i] <= gap) continue;
    const Index size = i - begin;
    const double sigma = out.sigma.segment(begin, size).mean();
    // The null cluster needs no phase fixing: A conj(u) = 0 there.
    if (sigma > 0.0) fix_cluster(a, sigma, out.u.middleCols(begin, size));
    begin = i;
  }
  return out;
}

}  // namespace antilinear
