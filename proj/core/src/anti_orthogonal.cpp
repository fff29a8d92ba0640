#include "antilinear/anti_orthogonal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "antilinear/error.hpp"

namespace antilinear {

namespace {

// Per-node coordinates of a polynomial p in the factored kernel: with
// K_j = [[1, psi_j], [conj psi_j, 1]] = M_j^* M_j, M_j = [[1, psi_j], [0, r_j]],
// y_j = M_j (p^e(s_j), p^o(s_j)) and [p, q] = sum_j w_j <y_j(p), y_j(q)>.
// Multiplication by s after starring acts as y -> s [[psi, r], [r, -conj psi]] conj(y),
// a unitary map, so components invisible to the form cannot grow and leak back.
struct NodeCoords {
  CVector first;
  CVector second;
};

class FactoredForm {
 public:
  FactoredForm(const SpectralData& data, double tol_phase)
      : s_(static_cast<Index>(data.size())), psi_(s_.size()), r_(s_.size()), w_(s_.size()) {
    const auto classes = classify(data, tol_phase);
    for (Index j = 0; j < s_.size(); ++j) {
      const auto jj = static_cast<std::size_t>(j);
      s_[j] = data.nodes[jj];
      psi_[j] = data.phases[jj];
      w_[j] = data.weights[jj];
      // r is sqrt-sensitive to |psi| near 1; S1 nodes must not open a second direction.
      if (classes[jj] == NodeClass::S1) {
        const double mod = std::abs(psi_[j]);
        psi_[j] = mod > 0.0 ? psi_[j] / mod : Complex{1.0, 0.0};
        r_[j] = 0.0;
      } else {
        r_[j] = std::sqrt(1.0 - std::norm(psi_[j]));
      }
    }
  }

  NodeCoords one() const { return {CVector::Ones(s_.size()), CVector::Zero(s_.size())}; }

  // sum_k c_k s^k, with each monomial carried by the unitary step so that no
  // intermediate exceeds s^k in modulus.
  NodeCoords coords(const ComplexPolynomial& p) const {
    NodeCoords acc{CVector::Zero(s_.size()), CVector::Zero(s_.size())};
    NodeCoords mono = one();
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (k > 0) mono = shift_star(mono);
      acc.first += p[k] * mono.first;
      acc.second += p[k] * mono.second;
    }
    return acc;
  }

  NodeCoords shift_star(const NodeCoords& y) const {
    NodeCoords out{CVector(s_.size()), CVector(s_.size())};
    for (Index j = 0; j < s_.size(); ++j) {
      const Complex c1 = std::conj(y.first[j]);
      const Complex c2 = std::conj(y.second[j]);
      out.first[j] = s_[j] * (psi_[j] * c1 + r_[j] * c2);
      out.second[j] = s_[j] * (r_[j] * c1 - std::conj(psi_[j]) * c2);
    }
    return out;
  }

  Complex form(const NodeCoords& p, const NodeCoords& q) const {
    Complex acc{};
    for (Index j = 0; j < s_.size(); ++j)
      acc += w_[j] * (p.first[j] * std::conj(q.first[j]) + p.second[j] * std::conj(q.second[j]));
    return acc;
  }

 private:
  RVector s_;
  CVector psi_;
  RVector r_;
  RVector w_;
};

void axpy(NodeCoords& y, Complex alpha, const NodeCoords& x) {
  y.first -= alpha * x.first;
  y.second -= alpha * x.second;
}

void check_params(const JacobiParameters& params, std::size_t n_max) {
  if (params.b.size() < n_max || params.a.size() < n_max)
    throw ValidationError("recurrence needs a_0..a_{n-1} and b_0..b_{n-1} for n = " +
                          std::to_string(n_max));
  for (std::size_t k = 0; k < n_max; ++k)
    if (!(params.a[k] > 0.0)) throw ValidationError("recurrence: a_" + std::to_string(k) + " <= 0");
}

}  // namespace

GramSchmidtResult gram_schmidt(const SpectralData& data, std::size_t n_max, double tol_degeneracy,
                               double tol_phase) {
  require_valid(data);
  if (n_max == 0) throw ValidationError("gram_schmidt: n_max must be at least 1");
  const double s_max = data.nodes.back();
  const double tol = tol_degeneracy >= 0.0 ? tol_degeneracy : 1e-12 * s_max * s_max;
  const FactoredForm form(data, tol_phase);

  GramSchmidtResult out;
  std::vector<NodeCoords> vals;
  out.polys.push_back(ComplexPolynomial::constant(1.0));
  vals.push_back(form.one());

  for (std::size_t n = 0;; ++n) {
    ComplexPolynomial p = star(out.polys[n]).shifted(1);
    NodeCoords pv = form.shift_star(vals[n]);

    const Complex b = form.form(pv, vals[n]);
    out.params.b.push_back(b);
    p -= b * out.polys[n];
    axpy(pv, b, vals[n]);
    if (n > 0) {
      const double a_prev = out.params.a[n - 1];
      p -= a_prev * out.polys[n - 1];
      axpy(pv, a_prev, vals[n - 1]);
    }
    for (std::size_t k = 0; k <= n; ++k) {
      const Complex c = form.form(pv, vals[k]);
      p -= c * out.polys[k];
      axpy(pv, c, vals[k]);
    }

    const double rr = form.form(pv, pv).real();
    out.last_residual = rr;
    if (rr < -tol) throw NumericError("gram_schmidt: [r, r] = " + std::to_string(rr) + " < 0");
    if (rr < tol) {
      out.degenerate = true;
      break;
    }
    if (n + 1 == n_max) break;
    const double a = std::sqrt(rr);
    out.params.a.push_back(a);
    out.polys.push_back(p / a);
    pv.first /= a;
    pv.second /= a;
    vals.push_back(std::move(pv));
  }
  out.count = out.polys.size();
  return out;
}

std::vector<ComplexPolynomial> recurrence_generate(const JacobiParameters& params, std::size_t n_max) {
  check_params(params, n_max);
  std::vector<ComplexPolynomial> q;
  q.push_back(ComplexPolynomial::constant(1.0));
  for (std::size_t n = 0; n < n_max; ++n) {
    ComplexPolynomial next = star(q[n]).shifted(1) - params.b[n] * q[n];
    if (n > 0) next -= params.a[n - 1] * q[n - 1];
    q.push_back(next / params.a[n]);
  }
  return q;
}

std::vector<Complex> recurrence_values(const JacobiParameters& params, std::size_t n_max, double s) {
  check_params(params, n_max);
  std::vector<Complex> q{Complex{1.0, 0.0}};
  for (std::size_t n = 0; n < n_max; ++n) {
    Complex next = s * std::conj(q[n]) - params.b[n] * q[n];
    if (n > 0) next -= params.a[n - 1] * q[n - 1];
    q.push_back(next / params.a[n]);
  }
  return q;
}

double verify_anti_orthogonality(const std::vector<ComplexPolynomial>& polys, const SpectralData& data,
                                 double tol_phase) {
  require_valid(data);
  const FactoredForm form(data, tol_phase);
  std::vector<NodeCoords> vals;
  vals.reserve(polys.size());
  for (const auto& p : polys) vals.push_back(form.coords(p));
  double worst = 0.0;
  for (std::size_t n = 0; n < vals.size(); ++n)
    for (std::size_t m = 0; m <= n; ++m) {
      const Complex g = form.form(vals[n], vals[m]);
      worst = std::max(worst, std::abs(g - (n == m ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace antilinear
