#include "ratcat/exactmath.hpp"

#include "ratcat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace ratcat {

GridShape::GridShape(std::size_t m, std::size_t n) : m_(m), n_(n), gcd_(std::gcd(m, n)) {
  if (m == 0 || n == 0) {
    throw DomainError("grid shape needs m >= 1 and n >= 1, got (" + std::to_string(m) + "," +
                      std::to_string(n) + ")");
  }
}

std::ostream& operator<<(std::ostream& os, const GridShape& shape) {
  return os << '(' << shape.m() << ',' << shape.n() << ')';
}

RationalSlope::RationalSlope(std::size_t a, std::size_t b) : a_(a), b_(b) {
  if (a == 0 || a >= b || std::gcd(a, b) != 1) {
    throw DomainError("rational slope needs coprime 0 < a < b, got a=" + std::to_string(a) +
                      " b=" + std::to_string(b));
  }
}

// --- BigRational -----------------------------------------------------------

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void BigRational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string BigRational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.num_ == 0) throw DomainError("rational division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.str(); }

// --- IntPolynomial ---------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients)
    : coeffs_(coefficients.begin(), coefficients.end()) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

PolynomialDivision divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigInt> rem = dividend.coefficients();
  const auto& den = divisor.coefficients();
  const BigInt& lead = den.back();
  if (rem.size() < den.size()) return {IntPolynomial{}, dividend};

  std::vector<BigInt> quot(rem.size() - den.size() + 1);
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    BigInt& top = rem[shift + den.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) {
      throw DivisibilityError("polynomial quotient " + dividend.str() + " / " + divisor.str() +
                              " is not integral");
    }
    BigInt factor = top / lead;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= factor * den[i];
    quot[shift] = std::move(factor);
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial divide_exact(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  auto [quotient, remainder] = divide(dividend, divisor);
  if (!remainder.is_zero()) {
    throw DivisibilityError(dividend.str() + " / " + divisor.str() + " leaves remainder " +
                            remainder.str());
  }
  return quotient;
}

// --- counting formulas -----------------------------------------------------

BigInt binomial(std::size_t t, std::size_t k) {
  if (k > t) {
    throw DomainError("binomial(" + std::to_string(t) + "," + std::to_string(k) + "): k > t");
  }
  k = std::min(k, t - k);
  BigInt acc = 1;
  // acc stays equal to binom(t-k+i, i) after step i, so each division is exact.
  for (std::size_t i = 1; i <= k; ++i) {
    acc *= t - k + i;
    acc /= i;
  }
  return acc;
}

BigInt c_gen(const GridShape& shape) {
  const BigInt scaled = BigInt(shape.gcd()) * binomial(shape.length(), shape.n());
  if (scaled % shape.length() != 0) {
    std::ostringstream os;
    os << "c_gen" << shape << ": gcd*binom not divisible by m+n";
    throw InvariantViolation(os.str());
  }
  return scaled / shape.length();
}

BigInt cat_rational(const RationalSlope& slope) {
  const std::size_t total = slope.a() + slope.b();
  const BigInt top = binomial(total, slope.a());
  if (top % total != 0) {
    throw InvariantViolation("cat_rational: binomial not divisible by a+b");
  }
  return top / total;
}

RationalSlope slope_from_rational(std::size_t p, std::size_t r) {
  if (p == 0 || r == 0) {
    throw DomainError("slope_from_rational needs p >= 1 and r >= 1, got " + std::to_string(p) +
                      "/" + std::to_string(r));
  }
  const std::size_t g = std::gcd(p, r);
  p /= g;
  r /= g;
  return RationalSlope(p, p + r);
}

IntPolynomial q_integer(std::size_t k) {
  if (k == 0) throw DomainError("q_integer needs k >= 1");
  return IntPolynomial(std::vector<BigInt>(k, BigInt(1)));
}

IntPolynomial q_binomial(std::size_t t, std::size_t k) {
  if (k > t) {
    throw DomainError("q_binomial(" + std::to_string(t) + "," + std::to_string(k) + "): k > t");
  }
  k = std::min(k, t - k);
  IntPolynomial acc{1};
  for (std::size_t i = 1; i <= k; ++i) {
    try {
      acc = divide_exact(acc * q_integer(t - k + i), q_integer(i));
    } catch (const DivisibilityError& e) {
      throw InvariantViolation(std::string("q_binomial: ") + e.what());
    }
  }
  return acc;
}

IntPolynomial q_catalan_normalized(const GridShape& shape) {
  const IntPolynomial numerator = q_integer(shape.gcd()) * q_binomial(shape.length(), shape.n());
  return divide_exact(numerator, q_integer(shape.length()));
}

BigInt poly_eval_at_one(const IntPolynomial& p) {
  BigInt sum = 0;
  for (const auto& c : p.coefficients()) sum += c;
  return sum;
}

}  // namespace ratcat
