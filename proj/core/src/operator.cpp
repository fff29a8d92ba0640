#include "antilinear/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "antilinear/error.hpp"

namespace antilinear {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPhaseClampSlack = 1e-9;
constexpr double kMassSlack = 1e-9;

CVector unit_vector(Index n, Index k) {
  CVector e = CVector::Zero(n);
  e[k] = 1.0;
  return e;
}

CVector random_unit(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (Index i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
  return v / v.norm();
}

// Cheap upper bound on ||A||_2 for symmetric A (max absolute row sum).
double norm_bound(const CMatrix& a) {
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

AntiLinearOperator::AntiLinearOperator(CMatrix matrix)
    : AntiLinearOperator(matrix, matrix.rows() > 0 ? unit_vector(matrix.rows(), 0) : CVector{}) {}

AntiLinearOperator::AntiLinearOperator(CMatrix matrix, CVector cyclic)
    : matrix_(std::move(matrix)), cyclic_(std::move(cyclic)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols())
    throw ValidationError("operator matrix must be square and non-empty");
  if (!matrix_.allFinite()) throw ValidationError("operator matrix has non-finite entries");
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  const double asym = (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance * scale)
    throw ValidationError("operator matrix is not symmetric (max |A - A^T| = " +
                          std::to_string(asym) + ")");
  if (cyclic_.size() != matrix_.rows())
    throw ValidationError("cyclic vector dimension does not match the matrix");
  if (std::abs(cyclic_.norm() - 1.0) > 1e-10) throw ValidationError("cyclic vector is not a unit vector");
}

CVector apply(const AntiLinearOperator& op, const CVector& x) {
  if (x.size() != op.dim()) throw ValidationError("apply: dimension mismatch");
  return op.matrix() * x.conjugate();
}

CMatrix square(const AntiLinearOperator& op) {
  CMatrix h = op.matrix() * op.matrix().conjugate();
  return (h + h.adjoint()) * 0.5;
}

ModulusSpectrum modulus_spectrum(const AntiLinearOperator& op, double tol_cluster) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(square(op));
  if (solver.info() != Eigen::Success) throw NumericError("eigen-solver failed on B^2");

  const RVector& lambda = solver.eigenvalues();
  const Index n = lambda.size();
  const double lambda_max = std::max(lambda[n - 1], 0.0);
  // Eigenvalues of B^2 within roundoff of zero carry no usable square root.
  const double zero_floor = 64.0 * kEps * static_cast<double>(n) * (1.0 + lambda_max);

  ModulusSpectrum out;
  out.eigenvalues.resize(n);
  for (Index i = 0; i < n; ++i)
    out.eigenvalues[i] = lambda[i] <= zero_floor ? 0.0 : std::sqrt(lambda[i]);
  out.eigenvectors = solver.eigenvectors();

  const double gap = tol_cluster * (1.0 + out.eigenvalues[n - 1]);
  Index begin = 0;
  for (Index i = 1; i <= n; ++i) {
    if (i == n || out.eigenvalues[i] - out.eigenvalues[i - 1] > gap) {
      EigenCluster c{begin, i - begin, 0.0};
      c.value = out.eigenvalues.segment(begin, c.size).mean();
      if (out.eigenvalues[begin] == 0.0) c.value = 0.0;
      out.clusters.push_back(c);
      begin = i;
    }
  }
  return out;
}

SpectralData extract_spectral_data(const AntiLinearOperator& op, const ExtractOptions& opts) {
  const ModulusSpectrum spec = modulus_spectrum(op, opts.tol_cluster);
  const CVector& delta = op.cyclic();
  const CVector b_delta = antilinear::apply(op, delta);
  // Roundoff in <P B delta, delta> is about n eps ||A|| sqrt(w), so psi itself
  // is only resolved to n eps ||A|| / (s sqrt(w)).
  const double noise = 64.0 * kEps * static_cast<double>(op.dim()) * norm_bound(op.matrix());

  SpectralData data;
  double total = 0.0;
  for (const auto& c : spec.clusters) {
    if (opts.assert_cyclic && c.value > 0.0 && c.size > 2)
      throw NumericError("|B| eigenvalue " + std::to_string(c.value) + " has multiplicity " +
                         std::to_string(c.size) + " > 2; the vector is not cyclic");
    const auto vc = spec.eigenvectors.middleCols(c.begin, c.size);
    const CVector proj = vc.adjoint() * delta;
    const double w = proj.squaredNorm();
    total += w;
    if (w < opts.tol_weight) continue;

    Complex psi{1.0, 0.0};
    if (c.value > 0.0) {
      const CVector proj_b = vc.adjoint() * b_delta;
      psi = proj.dot(proj_b) / (c.value * w);
      const double mod = std::abs(psi);
      const double slack = std::max(kPhaseClampSlack, noise / (c.value * std::sqrt(w)));
      if (mod > 1.0 + slack)
        throw NumericError("extracted |psi| = " + std::to_string(mod) + " exceeds 1");
      if (mod > 1.0) psi /= mod;
    }
    data.nodes.push_back(c.value);
    data.weights.push_back(w);
    data.phases.push_back(psi);
  }
  if (std::abs(total - 1.0) > kMassSlack)
    throw NumericError("spectral weights sum to " + std::to_string(total) + ", not 1");

  double kept = 0.0;
  for (double w : data.weights) kept += w;
  for (double& w : data.weights) w /= kept;
  return data;
}

LanczosResult lanczos_tridiagonalize(const AntiLinearOperator& op, std::size_t max_steps,
                                     double tol_breakdown) {
  const Index n = op.dim();
  const auto steps = static_cast<Index>(max_steps == 0 ? static_cast<std::size_t>(n)
                                                       : std::min<std::size_t>(max_steps, n));
  const double threshold = tol_breakdown * norm_bound(op.matrix());

  LanczosResult out;
  CMatrix basis(n, steps);
  basis.col(0) = op.cyclic();
  Index m = 1;
  for (Index k = 0;; ++k) {
    CVector r = antilinear::apply(op, basis.col(k));
    const Complex b = basis.col(k).dot(r);
    out.params.b.push_back(b);
    r -= b * basis.col(k);
    if (k > 0) r -= out.params.a.back() * basis.col(k - 1);
    // Full reorthogonalization against v_0 .. v_k, twice.
    const auto done = basis.leftCols(k + 1);
    for (int pass = 0; pass < 2; ++pass) r -= done * (done.adjoint() * r);

    const double a = r.norm();
    if (a < threshold) {
      out.breakdown = true;
      break;
    }
    if (k + 1 == steps) break;
    out.params.a.push_back(a);
    basis.col(k + 1) = r / a;
    m = k + 2;
  }
  out.basis = basis.leftCols(m);
  return out;
}

AntiLinearOperator jacobi_to_operator(const JacobiParameters& params, std::size_t n) {
  if (n == 0) throw ValidationError("jacobi_to_operator: n must be positive");
  if (params.b.size() < n || params.a.size() + 1 < n)
    throw ValidationError("jacobi_to_operator: not enough parameters for size " + std::to_string(n));
  const auto dim = static_cast<Index>(n);
  CMatrix j = CMatrix::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) {
    j(k, k) = params.b[static_cast<std::size_t>(k)];
    if (k + 1 < dim) {
      const double a = params.a[static_cast<std::size_t>(k)];
      if (!(a > 0.0)) throw ValidationError("jacobi_to_operator: a_" + std::to_string(k) + " <= 0");
      j(k, k + 1) = a;
      j(k + 1, k) = a;
    }
  }
  return AntiLinearOperator(std::move(j));
}

AntiLinearOperator jacobi_to_operator(const JacobiParameters& params) {
  return jacobi_to_operator(params, params.size());
}

double check_symmetry(const CMatrix& matrix, int samples, std::uint64_t seed) {
  const Index n = matrix.rows();
  auto pairing = [&](const CVector& x, const CVector& y) {
    const CVector bx = matrix * x.conjugate();
    const CVector by = matrix * y.conjugate();
    return std::abs(y.dot(bx) - x.dot(by));
  };
  double worst = 0.0;
  if (n <= 64) {
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        worst = std::max(worst, pairing(unit_vector(n, i), unit_vector(n, j)));
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) worst = std::max(worst, pairing(random_unit(n, rng), random_unit(n, rng)));
  return worst;
}

double check_symmetry(const AntiLinearOperator& op, int samples, std::uint64_t seed) {
  return check_symmetry(op.matrix(), samples, seed);
}

double operator_norm(const AntiLinearOperator& op) {
  Eigen::BDCSVD<CMatrix> svd(op.matrix());
  return svd.singularValues()[0];
}

CVector apply_polynomial(const AntiLinearOperator& op, const ComplexPolynomial& p, const CVector& x) {
  CVector acc = CVector::Zero(op.dim());
  CVector power = x;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) power = antilinear::apply(op, power);
    acc += p[static_cast<std::size_t>(k)] * power;
  }
  return acc;
}

}  // namespace antilinear
