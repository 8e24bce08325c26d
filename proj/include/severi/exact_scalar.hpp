#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace severi {

/// Exact value of an enumerative quantity: an arbitrary-precision rational
/// kept in lowest terms with a positive denominator. Integral values are
/// simply rationals with denominator one.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(int v) : value_(static_cast<long>(v)) {}
  ExactScalar(long v) : value_(v) {}
  ExactScalar(long long v);
  explicit ExactScalar(const mpz_class& v) : value_(v) {}
  explicit ExactScalar(const mpq_class& v);
  ExactScalar(long num, long den);

  ExactScalar(double) = delete;
  ExactScalar(float) = delete;

  /// Parses "p" or "p/q". Rejects anything that is not the canonical
  /// rendering of a reduced rational, so that parse(str()) is the identity.
  static ExactScalar parse(std::string_view text);

  std::string str() const;

  /// Decimal rendering with round-half-even at the requested number of
  /// fractional digits.
  std::string to_decimal(int places = 2) const;

  double to_double() const { return value_.get_d(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  const mpq_class& rational() const { return value_; }
  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& v) { return os << v.str(); }

 private:
  mpq_class value_;
};

/// Binomial coefficient as a big integer; zero when k < 0 or k > n.
mpz_class big_binomial(long n, long k);
mpz_class big_factorial(long n);

}  // namespace severi
