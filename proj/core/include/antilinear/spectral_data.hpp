#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "antilinear/poly.hpp"
#include "antilinear/types.hpp"

namespace antilinear {

inline constexpr double kDefaultTolPhase = 1e-9;

/// Finitely supported spectral data (nu, psi).
///
/// nu = sum_j weights[j] * delta_{nodes[j]} is the spectral measure of |B| at
/// the cyclic vector; phases[j] = psi(nodes[j]). Nodes are strictly
/// increasing and nonnegative, weights positive with unit sum, |psi| <= 1 and
/// psi = 1 at a node s = 0.
struct SpectralData {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<Complex> phases;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Node classes: S1 carries |psi| = 1 (multiplicity one), S2 carries |psi| < 1.
enum class NodeClass { S1, S2 };

const char* to_string(NodeClass c) noexcept;

/// Human-readable list of violated invariants; empty iff the data is valid.
std::vector<std::string> validate(const SpectralData& data);

/// Throws ValidationError carrying the first violations when invalid.
void require_valid(const SpectralData& data);

/// Even and odd parts of a polynomial sampled at the nodes of the data.
struct ParityValues {
  CVector even;
  CVector odd;
};

ParityValues parity_values(const ComplexPolynomial& p, const SpectralData& data);

/// The form [p, q] evaluated from node samples:
/// sum_j w_j <[[1, psi_j], [conj psi_j, 1]] (p^e, p^o)_j, (q^e, q^o)_j>.
/// No validation; callers own that.
Complex form_from_values(const ParityValues& p, const ParityValues& q, const SpectralData& data);

/// The sesquilinear form [p, q] on polynomials. Linear in p, anti-linear in q.
Complex sesquilinear_form(const ComplexPolynomial& p, const ComplexPolynomial& q,
                          const SpectralData& data);

std::vector<NodeClass> classify(const SpectralData& data, double tol_phase = kDefaultTolPhase);

/// Number of S1 nodes plus twice the number of S2 nodes.
std::size_t model_dimension(const SpectralData& data, double tol_phase = kDefaultTolPhase);

/// Phase change psi -> exp(-2 i alpha) psi, induced by delta -> exp(i alpha) delta.
/// Refuses data with a node at s = 0 unless alpha is a multiple of pi.
SpectralData gauge_transform(const SpectralData& data, double alpha);

/// Finite analogue of unitary equivalence of the underlying operators: same
/// support (nodes matched pairwise within tol) and same S1 set. Weights and
/// phase arguments do not enter.
bool equivalent(const SpectralData& lhs, const SpectralData& rhs, double tol,
                double tol_phase = kDefaultTolPhase);

}  // namespace antilinear
