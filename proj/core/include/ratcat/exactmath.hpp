#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ratcat {

using BigInt = boost::multiprecision::cpp_int;

/// Rectangle of m rows and n columns. A path on it uses m up-steps (U) and
/// n right-steps (R).
class GridShape {
 public:
  /// Throws DomainError unless m >= 1 and n >= 1.
  GridShape(std::size_t m, std::size_t n);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t length() const noexcept { return m_ + n_; }
  std::size_t gcd() const noexcept { return gcd_; }
  /// (m+n)/gcd(m,n); always >= 2.
  std::size_t block_length() const noexcept { return length() / gcd_; }

  friend bool operator==(const GridShape&, const GridShape&) = default;
  /// Orders by (m+n, m), the report order used throughout.
  friend std::strong_ordering operator<=>(const GridShape& a, const GridShape& b) noexcept {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.m_ <=> b.m_;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t gcd_;
};

std::ostream& operator<<(std::ostream& os, const GridShape& shape);

/// Positive rational q = a/(b-a) written with coprime 0 < a < b.
class RationalSlope {
 public:
  RationalSlope(std::size_t a, std::size_t b);

  std::size_t a() const noexcept { return a_; }
  std::size_t b() const noexcept { return b_; }

  friend bool operator==(const RationalSlope&, const RationalSlope&) = default;

 private:
  std::size_t a_;
  std::size_t b_;
};

/// Exact fraction kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(BigInt value) : num_(std::move(value)) {}  // NOLINT(implicit)
  BigRational(long long value) : num_(value) {}           // NOLINT(implicit)
  BigRational(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational&, const BigRational&) = default;
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

/// Dense polynomial in q with integer coefficients; index i holds the
/// coefficient of q^i. Trailing zeros are trimmed, so the zero polynomial
/// has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  const BigInt& leading() const { return coeffs_.back(); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string str() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division in Z[q]. Throws DomainError on a zero divisor and
/// DivisibilityError when a quotient coefficient would not be an integer.
PolynomialDivision divide(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// Quotient of an exact division; DivisibilityError on a nonzero remainder.
IntPolynomial divide_exact(const IntPolynomial& dividend, const IntPolynomial& divisor);

BigInt binomial(std::size_t t, std::size_t k);

/// gcd(m,n)/(m+n) * binom(m+n, n), always an integer.
BigInt c_gen(const GridShape& shape);

/// binom(a+b, a)/(a+b).
BigInt cat_rational(const RationalSlope& slope);

/// The slope (a, b) with q = p/r = a/(b-a).
RationalSlope slope_from_rational(std::size_t p, std::size_t r);

/// [k]_q = 1 + q + ... + q^(k-1).
IntPolynomial q_integer(std::size_t k);

/// Gaussian binomial, built as prod_{i=1..k} [t-k+i]_q / [i]_q with an exact
/// division after every factor.
IntPolynomial q_binomial(std::size_t t, std::size_t k);

/// [gcd(m,n)]_q * binom(m+n, n)_q / [m+n]_q.
IntPolynomial q_catalan_normalized(const GridShape& shape);

BigInt poly_eval_at_one(const IntPolynomial& p);

}  // namespace ratcat
