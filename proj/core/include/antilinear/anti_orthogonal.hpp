#pragma once

#include <cstddef>
#include <vector>

#include "antilinear/operator.hpp"
#include "antilinear/poly.hpp"
#include "antilinear/spectral_data.hpp"

namespace antilinear {

struct GramSchmidtResult {
  std::vector<ComplexPolynomial> polys;  // q_0 .. q_{m-1}
  JacobiParameters params;               // b_0 .. b_{m-1}, a_0 .. a_{m-2}
  std::size_t count = 0;                 // m
  bool degenerate = false;               // stopped because [r, r] fell below tolerance
  /// [r, r] of the last residual (the candidate a_{m-1}^2).
  double last_residual = 0.0;
};

/// Anti-orthogonal polynomials of the data by Gram-Schmidt on 1, s, s^2, ...
///
/// Each step forms p = s * star(q_n), takes b_n = [p, q_n], subtracts the
/// three-term part, re-orthogonalizes once against every earlier q_k, and
/// normalizes with a_n = sqrt([r, r]) > 0. The form is evaluated from node
/// samples of the even and odd parts, kept in the factored per-node kernel;
/// coefficients are carried along only for output. Nodes classified S1 under
/// tol_phase are treated as |psi| = 1 exactly.
/// tol_degeneracy < 0 selects 1e-12 * (max node)^2.
GramSchmidtResult gram_schmidt(const SpectralData& data, std::size_t n_max,
                               double tol_degeneracy = -1.0, double tol_phase = kDefaultTolPhase);

/// q_0 .. q_{n_max} from q_{n+1} = (s q_n^* - b_n q_n - a_{n-1} q_{n-1}) / a_n.
std::vector<ComplexPolynomial> recurrence_generate(const JacobiParameters& params, std::size_t n_max);

/// Values q_0(s) .. q_{n_max}(s) at a real point by the same recurrence run on
/// values (q^*(s) = conj(q(s)) for real s). Avoids monomial cancellation.
std::vector<Complex> recurrence_values(const JacobiParameters& params, std::size_t n_max, double s);

/// max_{n,m} |[q_n, q_m] - delta_nm|, with the form evaluated in the same
/// factored node coordinates as gram_schmidt.
double verify_anti_orthogonality(const std::vector<ComplexPolynomial>& polys, const SpectralData& data,
                                 double tol_phase = kDefaultTolPhase);

}  // namespace antilinear
