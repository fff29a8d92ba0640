#include "antilinear/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace antilinear {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
  trim();
}

ComplexPolynomial ComplexPolynomial::constant(Complex c) { return ComplexPolynomial({c}); }

ComplexPolynomial ComplexPolynomial::monomial(int power, Complex c) {
  if (power < 0) throw std::invalid_argument("monomial: negative power");
  std::vector<Complex> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return ComplexPolynomial(std::move(coeffs));
}

void ComplexPolynomial::trim() {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) < kTrimTolerance) coeffs_.pop_back();
}

ComplexPolynomial ComplexPolynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  if (is_zero()) return {};
  std::vector<Complex> out(coeffs_.size() + static_cast<std::size_t>(k));
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(Complex c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator/=(Complex c) {
  for (auto& x : coeffs_) x /= c;
  trim();
  return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Complex> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial star(const ComplexPolynomial& p) {
  std::vector<Complex> out(p.coeffs());
  for (auto& c : out) c = std::conj(c);
  return ComplexPolynomial(std::move(out));
}

ParityParts parity_split(const ComplexPolynomial& p) {
  std::vector<Complex> even(p.coeffs().size());
  std::vector<Complex> odd(p.coeffs().size());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) (k % 2 == 0 ? even : odd)[k] = p.coeffs()[k];
  return {ComplexPolynomial(std::move(even)), ComplexPolynomial(std::move(odd))};
}

Complex evaluate(const ComplexPolynomial& p, Complex s) {
  Complex acc{};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
  return acc;
}

namespace {

double chebyshev_recurrence(int n, double x, double u0, double u1) {
  if (n < 0) throw std::invalid_argument("chebyshev: negative degree");
  if (n == 0) return u0;
  double prev = u0;
  double cur = u1;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double chebyshev_t(int n, double x) { return chebyshev_recurrence(n, x, 1.0, x); }

double chebyshev_u(int n, double x) { return chebyshev_recurrence(n, x, 1.0, 2.0 * x); }

}  // namespace antilinear
