#include "antilinear/spectral_data.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "antilinear/error.hpp"

namespace antilinear {

namespace {

constexpr double kMassTolerance = 1e-12;
constexpr double kPhaseSlack = 1e-12;

}  // namespace

const char* to_string(NodeClass c) noexcept { return c == NodeClass::S1 ? "S1" : "S2"; }

std::vector<std::string> validate(const SpectralData& data) {
  std::vector<std::string> issues;
  const std::size_t n = data.nodes.size();
  if (n == 0) issues.emplace_back("no nodes");
  if (data.weights.size() != n || data.phases.size() != n) {
    std::ostringstream os;
    os << "length mismatch: " << n << " nodes, " << data.weights.size() << " weights, "
       << data.phases.size() << " phases";
    issues.push_back(os.str());
    return issues;
  }
  double mass = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = data.nodes[j];
    std::ostringstream os;
    if (!std::isfinite(s) || s < 0.0) {
      os << "node " << j << " is negative or not finite: " << s;
    } else if (j > 0 && !(s > data.nodes[j - 1])) {
      os << "nodes not strictly increasing at index " << j;
    } else if (!(data.weights[j] > 0.0) || !std::isfinite(data.weights[j])) {
      os << "weight " << j << " is not positive: " << data.weights[j];
    } else if (!(std::abs(data.phases[j]) <= 1.0 + kPhaseSlack)) {
      os << "|psi| > 1 at node " << j << ": " << std::abs(data.phases[j]);
    } else if (s == 0.0 && data.phases[j] != Complex{1.0, 0.0}) {
      os << "psi must equal 1 at the node s = 0";
    }
    if (!os.str().empty()) issues.push_back(os.str());
    mass += data.weights[j];
  }
  if (n > 0 && std::abs(mass - 1.0) > kMassTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "total mass " << mass << " differs from 1";
    issues.push_back(os.str());
  }
  return issues;
}

void require_valid(const SpectralData& data) {
  const auto issues = validate(data);
  if (issues.empty()) return;
  std::string msg = "invalid spectral data: " + issues.front();
  if (issues.size() > 1) msg += " (+" + std::to_string(issues.size() - 1) + " more)";
  throw ValidationError(msg);
}

ParityValues parity_values(const ComplexPolynomial& p, const SpectralData& data) {
  const auto parts = parity_split(p);
  const auto n = static_cast<Index>(data.size());
  ParityValues out{CVector(n), CVector(n)};
  for (Index j = 0; j < n; ++j) {
    const double s = data.nodes[static_cast<std::size_t>(j)];
    out.even[j] = evaluate(parts.even, s);
    out.odd[j] = evaluate(parts.odd, s);
  }
  return out;
}

Complex form_from_values(const ParityValues& p, const ParityValues& q, const SpectralData& data) {
  Complex acc{};
  for (Index j = 0; j < p.even.size(); ++j) {
    const auto jj = static_cast<std::size_t>(j);
    const Complex psi = data.phases[jj];
    const Complex qe = std::conj(q.even[j]);
    const Complex qo = std::conj(q.odd[j]);
    acc += data.weights[jj] *
           (p.even[j] * qe + p.odd[j] * qe * psi + p.even[j] * qo * std::conj(psi) + p.odd[j] * qo);
  }
  return acc;
}

Complex sesquilinear_form(const ComplexPolynomial& p, const ComplexPolynomial& q,
                          const SpectralData& data) {
  require_valid(data);
  return form_from_values(parity_values(p, data), parity_values(q, data), data);
}

std::vector<NodeClass> classify(const SpectralData& data, double tol_phase) {
  std::vector<NodeClass> out(data.size());
  for (std::size_t j = 0; j < data.size(); ++j) {
    const bool s1 = data.nodes[j] == 0.0 || std::abs(data.phases[j]) >= 1.0 - tol_phase;
    out[j] = s1 ? NodeClass::S1 : NodeClass::S2;
  }
  return out;
}

std::size_t model_dimension(const SpectralData& data, double tol_phase) {
  std::size_t d = 0;
  for (auto c : classify(data, tol_phase)) d += c == NodeClass::S1 ? 1 : 2;
  return d;
}

SpectralData gauge_transform(const SpectralData& data, double alpha) {
  require_valid(data);
  const double turns = alpha / std::numbers::pi;
  const bool trivial_at_zero = std::abs(turns - std::round(turns)) < 1e-12;
  SpectralData out = data;
  const Complex factor = std::polar(1.0, -2.0 * alpha);
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (out.nodes[j] == 0.0) {
      if (!trivial_at_zero)
        throw ValidationError("gauge_transform: psi(0) = 1 cannot be kept for alpha not in pi*Z");
      continue;
    }
    out.phases[j] *= factor;
  }
  return out;
}

bool equivalent(const SpectralData& lhs, const SpectralData& rhs, double tol, double tol_phase) {
  if (lhs.size() != rhs.size()) return false;
  const auto cl = classify(lhs, tol_phase);
  const auto cr = classify(rhs, tol_phase);
  for (std::size_t j = 0; j < lhs.size(); ++j) {
    if (std::abs(lhs.nodes[j] - rhs.nodes[j]) > tol) return false;
    if (cl[j] != cr[j]) return false;
  }
  return true;
}

}  // namespace antilinear
