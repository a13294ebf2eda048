#include "hermquad/poly.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "hermquad/error.hpp"

namespace hermquad {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t k) {
  if (c == 0) return {};
  std::vector<BigInt> v(k + 1);
  v[k] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPolynomial::degree() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomialDegree, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

BigInt IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

bool IntPolynomial::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<BigInt> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) v[i] += q.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
  return p + (-q);
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> v(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> v(p.coeffs_);
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

IntPolynomial shift(const IntPolynomial& p, std::size_t k) {
  if (p.is_zero()) return {};
  std::vector<BigInt> v(k);
  v.insert(v.end(), p.coefficients().begin(), p.coefficients().end());
  return IntPolynomial(std::move(v));
}

IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  if (num.is_zero()) return {};

  const std::size_t dn = den.degree();
  if (num.degree() < dn) throw Error(Errc::NonExactDivision, "degree of numerator below divisor");

  std::vector<BigInt> rem(num.coefficients().begin(), num.coefficients().end());
  std::vector<BigInt> quot(num.degree() - dn + 1);
  const BigInt& lead = den.coefficients().back();

  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + dn];
    if (top == 0) continue;
    if (top % lead != 0) throw Error(Errc::NonExactDivision, "non-integral quotient coefficient");
    BigInt c = top / lead;
    for (std::size_t j = 0; j <= dn; ++j) rem[k + j] -= c * den.coefficients()[j];
    quot[k] = std::move(c);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
    throw Error(Errc::NonExactDivision, "nonzero remainder");
  return IntPolynomial(std::move(quot));
}

BigInt evaluate(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  auto cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::string superscript(std::size_t k) {
  static constexpr std::array<const char*, 10> digits = {
      "⁰", "¹", "²", "³", "⁴",
      "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char ch : std::to_string(k)) s += digits[static_cast<std::size_t>(ch - '0')];
  return s;
}

void require_rank(std::int64_t n, std::int64_t min, const char* what) {
  if (n < min)
    throw Error(Errc::InvalidRank, std::string(what) + " must be >= " + std::to_string(min) +
                                       ", got " + std::to_string(n));
}

}  // namespace

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const BigInt& c = cs[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << superscript(i);
  }
  return os.str();
}

IntPolynomial geometric_sum(std::size_t m) {
  return IntPolynomial(std::vector<BigInt>(m + 1, BigInt(1)));
}

IntPolynomial poincare_split_quadric(std::int64_t n) {
  require_rank(n, 2, "rank n");
  const auto un = static_cast<std::size_t>(n);
  const IntPolynomial one_minus_t{1, -1};
  IntPolynomial num = (IntPolynomial{1} - IntPolynomial::monomial(1, un)) *
                      (IntPolynomial{1} + IntPolynomial::monomial(1, un - 1));
  return exact_div(num, one_minus_t);
}

IntPolynomial poincare_split_hermitian(std::int64_t n) {
  require_rank(n, 2, "rank n");
  const auto un = static_cast<std::size_t>(n);
  const IntPolynomial one_minus_t{1, -1};
  IntPolynomial num = (IntPolynomial{1} - IntPolynomial::monomial(1, un)) *
                      (IntPolynomial{1} - IntPolynomial::monomial(1, un - 1));
  return exact_div(num, one_minus_t * one_minus_t);
}

IntPolynomial poincare_projective(std::int64_t m, int point_factor) {
  require_rank(m, 0, "projective dimension m");
  if (point_factor != 1 && point_factor != 2)
    throw Error(Errc::InvalidRank, "point factor must be 1 or 2");
  return BigInt(point_factor) * geometric_sum(static_cast<std::size_t>(m));
}

IntPolynomial poincare_quadric_of_dimension(std::int64_t dim) {
  require_rank(dim, 0, "quadric dimension");
  const auto d = static_cast<std::size_t>(dim);
  IntPolynomial p = geometric_sum(d);
  if (d % 2 == 0) p += IntPolynomial::monomial(1, d / 2);
  return p;
}

}  // namespace hermquad
