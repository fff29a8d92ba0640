#pragma once

#include <cstddef>
#include <vector>

#include "antilinear/operator.hpp"
#include "antilinear/spectral_data.hpp"

namespace antilinear {

/// One node's coordinates in the model space: a single slot for S1 nodes,
/// two consecutive slots for S2 nodes.
struct ModelBlock {
  std::size_t node = 0;
  std::size_t offset = 0;
  int size = 1;
};

/// Coordinates of the model space M = { f in L^2(nu; C^2) : f_2 = 0 on S1 }.
///
/// The basis vector of (node j, slot) is the indicator of node j in that
/// component scaled by w_j^{-1/2}, which makes the L^2(nu; C^2) inner product
/// the standard one. The function 1 = (1, 0) then has coordinate sqrt(w_j)
/// in slot 1 of node j.
struct ModelSpace {
  std::vector<ModelBlock> blocks;
  std::vector<double> weights;
  std::size_t dimension = 0;
};

struct Model {
  AntiLinearOperator op;  // block-diagonal matrix, cyclic vector = coordinates of 1
  ModelSpace space;
};

/// The model operator (B f)(s) = s [[psi, r], [r, -conj psi]] conj(f(s)),
/// r = sqrt(1 - |psi|^2), as a block-diagonal complex symmetric matrix.
/// S1 phases are normalized to unit modulus.
Model build_model(const SpectralData& data, double tol_phase = kDefaultTolPhase);

/// Residuals of the four defining properties of the model.
struct ModelReport {
  double symmetry = 0.0;      // max |<Bf, g> - <Bg, f>|
  double modulus = 0.0;       // max |B^2 - diag(s^2)|, i.e. |B| = M_s
  double moments = 0.0;       // moment identities for f(s) = s^k, k <= 6, relative
  std::size_t krylov_rank = 0;
  std::size_t dimension = 0;  // cyclic iff krylov_rank == dimension

  bool cyclic() const noexcept { return krylov_rank == dimension; }
};

ModelReport verify_model(const SpectralData& data, double tol_phase = kDefaultTolPhase);

/// Dimension of span{ B^k v : k >= 0 }, counted by orthonormalizing the
/// iterates and discarding those with relative residual below tol.
std::size_t krylov_rank(const AntiLinearOperator& op, const CVector& v, double tol = 1e-9);

}  // namespace antilinear
