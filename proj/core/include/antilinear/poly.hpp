#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "antilinear/types.hpp"

namespace antilinear {

/// Polynomial with complex coefficients in the monomial basis.
///
/// Coefficient k multiplies s^k. Trailing coefficients with modulus below
/// kTrimTolerance are dropped on construction, so the zero polynomial is the
/// empty sequence and degree() is well defined.
class ComplexPolynomial {
 public:
  static constexpr double kTrimTolerance = 1e-14;

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Complex> coeffs);
  ComplexPolynomial(std::initializer_list<Complex> coeffs);

  static ComplexPolynomial constant(Complex c);
  static ComplexPolynomial monomial(int power, Complex c = 1.0);

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of s^k; zero past the degree.
  Complex operator[](std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }
  Complex leading() const noexcept { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

  /// Multiplication by s^k.
  ComplexPolynomial shifted(int k) const;

  ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
  ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
  ComplexPolynomial& operator*=(Complex c);
  ComplexPolynomial& operator/=(Complex c);

  friend ComplexPolynomial operator+(ComplexPolynomial lhs, const ComplexPolynomial& rhs) {
    return lhs += rhs;
  }
  friend ComplexPolynomial operator-(ComplexPolynomial lhs, const ComplexPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend ComplexPolynomial operator*(ComplexPolynomial p, Complex c) { return p *= c; }
  friend ComplexPolynomial operator*(Complex c, ComplexPolynomial p) { return p *= c; }
  friend ComplexPolynomial operator/(ComplexPolynomial p, Complex c) { return p /= c; }
  friend ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs);

  friend bool operator==(const ComplexPolynomial&, const ComplexPolynomial&) = default;

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

/// Polynomial with complex-conjugated coefficients. For real s,
/// star(p)(s) == conj(p(s)).
ComplexPolynomial star(const ComplexPolynomial& p);

struct ParityParts {
  ComplexPolynomial even;
  ComplexPolynomial odd;
};

/// even(s) = (p(s) + p(-s)) / 2, odd(s) = (p(s) - p(-s)) / 2.
ParityParts parity_split(const ComplexPolynomial& p);

/// Horner evaluation.
Complex evaluate(const ComplexPolynomial& p, Complex s);

/// Chebyshev polynomials of the first and second kind, evaluated by the
/// three-term recurrence u_{n+1} = 2x u_n - u_{n-1}.
double chebyshev_t(int n, double x);
double chebyshev_u(int n, double x);

}  // namespace antilinear
