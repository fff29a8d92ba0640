#include "antilinear/banded.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "antilinear/error.hpp"

namespace antilinear {

BandedMatrix::BandedMatrix(Index n, Index kl, Index ku)
    : n_(n), kl_(kl), ku_(ku), rows_(2 * kl + ku + 1),
      data_(static_cast<std::size_t>(rows_ * n), Complex{}) {
  if (n <= 0 || kl < 0 || ku < 0) throw ValidationError("BandedMatrix: bad dimensions");
}

CVector BandedMatrix::solve(const CVector& rhs) const {
  if (rhs.size() != n_) throw ValidationError("BandedMatrix::solve: dimension mismatch");
  BandedMatrix lu = *this;
  CVector x = rhs;
  // After pivoting, U has up to kl + ku super-diagonals.
  const Index width = kl_ + ku_;
  auto at = [&lu](Index i, Index j) -> Complex& { return lu.data_[lu.slot(i, j)]; };

  for (Index j = 0; j < n_; ++j) {
    const Index last_row = std::min(n_ - 1, j + kl_);
    const Index last_col = std::min(n_ - 1, j + width);
    Index piv = j;
    for (Index i = j + 1; i <= last_row; ++i)
      if (std::abs(at(i, j)) > std::abs(at(piv, j))) piv = i;
    if (at(piv, j) == Complex{}) throw NumericError("BandedMatrix::solve: singular matrix");
    if (piv != j) {
      for (Index c = j; c <= last_col; ++c) std::swap(at(j, c), at(piv, c));
      std::swap(x[j], x[piv]);
    }
    const Complex pivot = at(j, j);
    for (Index i = j + 1; i <= last_row; ++i) {
      const Complex l = at(i, j) / pivot;
      if (l == Complex{}) continue;
      at(i, j) = Complex{};
      for (Index c = j + 1; c <= last_col; ++c) at(i, c) -= l * at(j, c);
      x[i] -= l * x[j];
    }
  }
  for (Index j = n_ - 1; j >= 0; --j) {
    Complex acc = x[j];
    const Index last_col = std::min(n_ - 1, j + width);
    for (Index c = j + 1; c <= last_col; ++c) acc -= at(j, c) * x[c];
    x[j] = acc / at(j, j);
  }
  return x;
}

}  // namespace antilinear
