#include "antilinear/delta_example.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "antilinear/anti_orthogonal.hpp"
#include "antilinear/banded.hpp"
#include "antilinear/error.hpp"
#include "antilinear/poly.hpp"
#include "antilinear/quadrature.hpp"

namespace antilinear::delta {

namespace {

constexpr double kPoleTolerance = 1e-12;
constexpr double kMassGuard = 1e-3;

void require_interval(double s, const char* what) {
  if (!(s >= 0.0 && s <= 2.0))
    throw ValidationError(std::string(what) + ": s = " + std::to_string(s) + " outside [0, 2]");
}

void require_disk(Complex xi, const char* what) {
  const double r = std::abs(xi);
  if (!(r > 0.0 && r < 1.0)) throw ValidationError(std::string(what) + ": need 0 < |xi| < 1");
}

Complex guarded_inverse(Complex denom, const char* what) {
  if (std::abs(denom) < kPoleTolerance) throw NumericError(std::string(what) + ": too close to a pole");
  return 1.0 / denom;
}

// density(s) ds with s = 2 cos(phi): the sqrt(4 - s^2) factor becomes 2 sin(phi).
double density_angle(double phi, double w2) {
  const double sn = std::sin(phi);
  const double cs = std::cos(phi);
  const double denom = (1.0 + w2) * (1.0 + w2) - 4.0 * w2 * cs * cs;
  return (w2 + 1.0) / std::numbers::pi * 4.0 * sn * sn / denom;
}

}  // namespace

double density(double s, Complex omega) {
  require_interval(s, "density");
  const double w2 = std::norm(omega);
  return (w2 + 1.0) / std::numbers::pi * std::sqrt(4.0 - s * s) /
         ((1.0 + w2) * (1.0 + w2) - w2 * s * s);
}

std::optional<Atom> atom(Complex omega) {
  const double r = std::abs(omega);
  if (!(r > 1.0)) return std::nullopt;
  return Atom{r + 1.0 / r, (r * r - 1.0) / (r * r), omega / r};
}

Complex phase(double s, Complex omega) {
  require_interval(s, "phase");
  return omega * s / (1.0 + std::norm(omega));
}

Discretization discretize(Complex omega, int quadrature_nodes, Quadrature rule) {
  if (quadrature_nodes < 2) throw ValidationError("discretize: need at least 2 quadrature nodes");
  const double w2 = std::norm(omega);

  std::vector<double> nodes;
  std::vector<double> weights;
  if (rule == Quadrature::legendre) {
    const auto gl = gauss_legendre(quadrature_nodes, 0.0, 2.0);
    nodes = gl.nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i) weights.push_back(density(nodes[i], omega) * gl.weights[i]);
  } else {
    const auto gl = gauss_legendre(quadrature_nodes, 0.0, 0.5 * std::numbers::pi);
    // Descending phi gives ascending s.
    for (std::size_t i = gl.nodes.size(); i-- > 0;) {
      nodes.push_back(2.0 * std::cos(gl.nodes[i]));
      weights.push_back(density_angle(gl.nodes[i], w2) * gl.weights[i]);
    }
  }

  Discretization out;
  SpectralData& data = out.data;
  data.nodes = std::move(nodes);
  data.weights = std::move(weights);
  for (double s : data.nodes) data.phases.push_back(omega * s / (1.0 + w2));
  if (const auto at = atom(omega)) {
    data.nodes.push_back(at->location);
    data.weights.push_back(at->weight);
    data.phases.push_back(at->phase);
  }

  const double mass = std::accumulate(data.weights.begin(), data.weights.end(), 0.0);
  out.renormalization = mass;
  if (std::abs(mass - 1.0) > kMassGuard)
    throw NumericError("discretize: quadrature mass " + std::to_string(mass) + " is not close to 1");
  for (double& w : data.weights) w /= mass;
  return out;
}

Complex resolvent_00(Complex xi, Complex omega) {
  require_disk(xi, "resolvent_00");
  return xi * guarded_inverse((1.0 + xi) * (1.0 - std::norm(omega) * xi), "resolvent_00");
}

Complex resolvent_01(Complex xi, Complex omega) {
  require_disk(xi, "resolvent_01");
  return omega * xi * xi * guarded_inverse((1.0 + xi) * (1.0 - std::norm(omega) * xi), "resolvent_01");
}

Complex cauchy_nu(Complex xi, Complex omega) {
  require_disk(xi, "cauchy_nu");
  return xi * guarded_inverse(1.0 - std::norm(omega) * xi * xi, "cauchy_nu");
}

Complex cauchy_psi(Complex xi, Complex omega) {
  require_disk(xi, "cauchy_psi");
  return omega * xi * (1.0 + xi * xi) * guarded_inverse(1.0 - std::norm(omega) * xi * xi, "cauchy_psi");
}

Complex cauchy_nu_sum(Complex xi, const SpectralData& data) {
  require_disk(xi, "cauchy_nu_sum");
  const Complex z = xi + 1.0 / xi;
  Complex acc{};
  for (std::size_t j = 0; j < data.size(); ++j)
    acc += data.weights[j] * z / (z * z - data.nodes[j] * data.nodes[j]);
  return acc;
}

Complex cauchy_psi_sum(Complex xi, const SpectralData& data) {
  require_disk(xi, "cauchy_psi_sum");
  const Complex z = xi + 1.0 / xi;
  Complex acc{};
  for (std::size_t j = 0; j < data.size(); ++j) {
    const double s = data.nodes[j];
    acc += data.weights[j] * s * data.phases[j] * z / (z * z - s * s);
  }
  return acc;
}

Complex chebyshev_q(int n, double s, Complex omega) {
  if (n < 0) throw ValidationError("chebyshev_q: negative index");
  const double gap = 2.0 - s * s;
  if (std::abs(gap) < 1e-6) {
    const auto n_max = static_cast<std::size_t>(n);
    return recurrence_values(parameters(omega, n_max), n_max, s).back();
  }
  const int half = n / 2;
  const double t = chebyshev_t(2 * half, 0.5 * s);
  const double u = chebyshev_u(2 * half + 1, 0.5 * s);
  if (n % 2 == 0) {
    const Complex wb = std::conj(omega);
    return ((2.0 - 2.0 * wb * s) * t + (2.0 * wb - s) * u) / gap;
  }
  return (-2.0 * omega * t + (2.0 + omega * s - s * s) * u) / gap;
}

JacobiParameters parameters(Complex omega, std::size_t n) {
  JacobiParameters p;
  p.a.assign(n, 1.0);
  p.b.assign(n, Complex{});
  if (n > 0) p.b[0] = omega;
  return p;
}

AntiLinearOperator build_truncated_J(Complex omega, int n) {
  if (n < 1) throw ValidationError("build_truncated_J: N must be positive");
  const auto size = static_cast<std::size_t>(n);
  return jacobi_to_operator(parameters(omega, size), size);
}

Complex truncated_resolvent(Complex xi, Complex omega, int n, int row, int col) {
  require_disk(xi, "truncated_resolvent");
  if (n < 1 || row < 0 || col < 0 || row >= n || col >= n)
    throw ValidationError("truncated_resolvent: index out of range");
  const Complex z = 2.0 + xi + 1.0 / xi;
  // J J^* for tridiagonal J with diagonal d and unit off-diagonals is
  // pentadiagonal Hermitian.
  std::vector<Complex> d(static_cast<std::size_t>(n), Complex{});
  d[0] = omega;
  auto diag = [&](Index i) { return d[static_cast<std::size_t>(i)]; };
  const Index size = n;
  BandedMatrix m(size, 2, 2);
  for (Index i = 0; i < size; ++i) {
    double off2 = 0.0;
    if (i > 0) off2 += 1.0;
    if (i + 1 < size) off2 += 1.0;
    m(i, i) = z - (std::norm(diag(i)) + off2);
    if (i + 1 < size) {
      const Complex up = diag(i) + std::conj(diag(i + 1));
      m(i, i + 1) = -up;
      m(i + 1, i) = -std::conj(up);
    }
    if (i + 2 < size) {
      m(i, i + 2) = -1.0;
      m(i + 2, i) = -1.0;
    }
  }
  CVector rhs = CVector::Zero(size);
  rhs[col] = 1.0;
  return m.solve(rhs)[row];
}

}  // namespace antilinear::delta
