#include "antilinear/functional_model.hpp"

#include <algorithm>
#include <cmath>

#include "antilinear/error.hpp"

namespace antilinear {

Model build_model(const SpectralData& data, double tol_phase) {
  require_valid(data);
  const auto classes = classify(data, tol_phase);

  ModelSpace space;
  space.weights = data.weights;
  for (std::size_t j = 0; j < data.size(); ++j) {
    const int size = classes[j] == NodeClass::S1 ? 1 : 2;
    space.blocks.push_back({j, space.dimension, size});
    space.dimension += static_cast<std::size_t>(size);
  }

  const auto d = static_cast<Index>(space.dimension);
  CMatrix m = CMatrix::Zero(d, d);
  CVector one = CVector::Zero(d);
  for (const auto& blk : space.blocks) {
    const auto o = static_cast<Index>(blk.offset);
    const double s = data.nodes[blk.node];
    Complex psi = data.phases[blk.node];
    one[o] = std::sqrt(data.weights[blk.node]);
    if (blk.size == 1) {
      if (s > 0.0) psi /= std::abs(psi);
      m(o, o) = s * psi;
    } else {
      const double r = std::sqrt(std::max(0.0, 1.0 - std::norm(psi)));
      m(o, o) = s * psi;
      m(o, o + 1) = s * r;
      m(o + 1, o) = s * r;
      m(o + 1, o + 1) = -s * std::conj(psi);
    }
  }
  // sqrt(w_j) coordinates have unit norm only up to rounding of sum w_j.
  one /= one.norm();
  return {AntiLinearOperator(std::move(m), std::move(one)), std::move(space)};
}

std::size_t krylov_rank(const AntiLinearOperator& op, const CVector& v, double tol) {
  const Index n = op.dim();
  CMatrix q(n, n);
  Index rank = 0;
  CVector x = v / v.norm();
  for (Index k = 0; k < n; ++k) {
    CVector r = x;
    for (int pass = 0; pass < 2; ++pass) r -= q.leftCols(rank) * (q.leftCols(rank).adjoint() * r);
    const double res = r.norm();
    if (res <= tol * x.norm()) break;
    q.col(rank++) = r / res;
    // Next Krylov direction from the newest orthonormal vector keeps the
    // iterates well scaled without changing the span.
    x = antilinear::apply(op, q.col(rank - 1));
  }
  return static_cast<std::size_t>(rank);
}

ModelReport verify_model(const SpectralData& data, double tol_phase) {
  const Model model = build_model(data, tol_phase);
  const AntiLinearOperator& op = model.op;
  const Index d = op.dim();

  ModelReport rep;
  rep.dimension = model.space.dimension;
  rep.symmetry = check_symmetry(op);

  RVector s_coord(d);
  for (const auto& blk : model.space.blocks)
    for (int t = 0; t < blk.size; ++t)
      s_coord[static_cast<Index>(blk.offset) + t] = data.nodes[blk.node];
  const CMatrix b2 = square(op);
  rep.modulus = (b2 - s_coord.array().square().matrix().cast<Complex>().asDiagonal().toDenseMatrix())
                    .cwiseAbs()
                    .maxCoeff();

  // |B| from its own spectral decomposition, independent of the layout.
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(b2);
  if (solver.info() != Eigen::Success) throw NumericError("verify_model: eigen-solver failed");
  const RVector mod_vals = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const CMatrix& vecs = solver.eigenvectors();
  const CVector& one = op.cyclic();
  const CVector b_one = antilinear::apply(op, one);
  const CVector c_one = vecs.adjoint() * one;
  const CVector c_bone = vecs.adjoint() * b_one;
  for (int k = 0; k <= 6; ++k) {
    Complex lhs_nu{};
    Complex lhs_psi{};
    for (Index i = 0; i < d; ++i) {
      const double f = std::pow(mod_vals[i], k);
      lhs_nu += f * std::norm(c_one[i]);
      lhs_psi += f * std::conj(c_one[i]) * c_bone[i];
    }
    Complex rhs_nu{};
    Complex rhs_psi{};
    for (std::size_t j = 0; j < data.size(); ++j) {
      const double s = data.nodes[j];
      const double f = std::pow(s, k);
      Complex psi = data.phases[j];
      if (model.space.blocks[j].size == 1 && s > 0.0) psi /= std::abs(psi);
      rhs_nu += data.weights[j] * f;
      rhs_psi += data.weights[j] * s * f * psi;
    }
    const double scale = 1.0 + std::abs(rhs_nu);
    rep.moments = std::max({rep.moments, std::abs(lhs_nu - rhs_nu) / scale,
                            std::abs(lhs_psi - rhs_psi) / (1.0 + std::abs(rhs_psi))});
  }

  rep.krylov_rank = krylov_rank(op, one);
  return rep;
}

}  // namespace antilinear
