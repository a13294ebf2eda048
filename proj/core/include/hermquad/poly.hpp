#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hermquad {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Dense univariate polynomial in t with arbitrary-precision integer
 * coefficients, lowest degree first.
 *
 * The coefficient vector is kept trimmed: the last stored coefficient is
 * nonzero, and the zero polynomial stores nothing. Values are immutable
 * from the outside; every operation returns a new polynomial.
 */
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  /// c * t^k
  static IntPolynomial monomial(BigInt c, std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial. Throws ZeroPolynomialDegree for 0.
  std::size_t degree() const;

  /// Coefficient of t^i; zero past the degree.
  BigInt coeff(std::size_t i) const;

  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  bool is_palindromic() const;
  bool has_nonnegative_coefficients() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);

  IntPolynomial& operator+=(const IntPolynomial& q) { return *this = *this + q; }
  IntPolynomial& operator-=(const IntPolynomial& q) { return *this = *this - q; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Multiplication by t^k.
IntPolynomial shift(const IntPolynomial& p, std::size_t k);

/**
 * Exact quotient num / den over the integers.
 *
 * Throws DivisionByZero when den is zero and NonExactDivision when the
 * long division leaves a remainder or needs a non-integral coefficient.
 */
IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den);

BigInt evaluate(const IntPolynomial& p, const BigInt& x);

/// Conventional notation, e.g. "1 + 2t + t²"; "0" for the zero polynomial.
std::string to_string(const IntPolynomial& p);

/// 1 + t + ... + t^m
IntPolynomial geometric_sum(std::size_t m);

/// (1 - t^n)(1 + t^(n-1)) / (1 - t), the split Poincaré polynomial of the
/// (2n-2)-dimensional quadric of the trace form of a rank n Hermitian space.
IntPolynomial poincare_split_quadric(std::int64_t n);

/// (1 - t^n)(1 - t^(n-1)) / (1 - t)^2, the split Poincaré polynomial of the
/// (2n-3)-dimensional Hermitian quadric.
IntPolynomial poincare_split_hermitian(std::int64_t n);

/// point_factor * (1 + t + ... + t^m); point_factor is 1 for a rational
/// point and 2 for Spec L.
IntPolynomial poincare_projective(std::int64_t m, int point_factor);

/// Split Poincaré polynomial of a smooth projective quadric of dimension D:
/// 1 + ... + t^D, with the middle coefficient doubled when D is even.
IntPolynomial poincare_quadric_of_dimension(std::int64_t dim);

}  // namespace hermquad
