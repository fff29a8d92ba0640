#pragma once

#include <vector>

#include "antilinear/types.hpp"

namespace antilinear {

/// General complex banded matrix with kl sub- and ku super-diagonals, stored
/// with kl extra rows of fill so that LU with partial pivoting fits in place.
class BandedMatrix {
 public:
  BandedMatrix(Index n, Index kl, Index ku);

  Index size() const noexcept { return n_; }
  Index lower() const noexcept { return kl_; }
  Index upper() const noexcept { return ku_; }

  /// Entry (i, j); requires j - ku <= i <= j + kl.
  Complex& operator()(Index i, Index j) { return data_[slot(i, j)]; }
  Complex operator()(Index i, Index j) const { return data_[slot(i, j)]; }

  bool in_band(Index i, Index j) const noexcept { return i - j <= kl_ && j - i <= ku_; }

  /// Solves A x = rhs by Gaussian elimination with partial pivoting.
  /// Works on a copy; throws NumericError on a zero pivot.
  CVector solve(const CVector& rhs) const;

 private:
  std::size_t slot(Index i, Index j) const noexcept {
    return static_cast<std::size_t>((kl_ + ku_ + i - j) + j * rows_);
  }

  Index n_;
  Index kl_;
  Index ku_;
  Index rows_;  // 2 kl + ku + 1
  std::vector<Complex> data_;
};

}  // namespace antilinear
