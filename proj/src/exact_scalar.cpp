#include "severi/exact_scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace severi {

ExactScalar::ExactScalar(long long v) {
  const std::string digits = std::to_string(v);
  value_ = mpq_class(mpz_class(digits));
}

ExactScalar::ExactScalar(const mpq_class& v) : value_(v) { value_.canonicalize(); }

ExactScalar::ExactScalar(long num, long den) {
  if (den == 0) throw std::domain_error("ExactScalar: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// No leading zeros except for the single digit "0".
bool canonical_natural(std::string_view s) {
  return all_digits(s) && (s.size() == 1 || s.front() != '0');
}

}  // namespace

ExactScalar ExactScalar::parse(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!canonical_natural(num)) throw bad();
  if (negative && num == "0") throw bad();

  ExactScalar out;
  if (slash == std::string_view::npos) {
    out.value_ = mpq_class(mpz_class(std::string(num)));
    if (negative) out.value_ = -out.value_;
    return out;
  }
  const std::string_view den = body.substr(slash + 1);
  if (!canonical_natural(den) || den == "0" || den == "1") throw bad();
  mpz_class n(std::string{num});
  mpz_class d(std::string{den});
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw bad();
  out.value_ = mpq_class(n, d);
  if (negative) out.value_ = -out.value_;
  return out;
}

std::string ExactScalar::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string ExactScalar::to_decimal(int places) const {
  if (places < 0) throw std::invalid_argument("negative decimal places");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const mpq_class scaled = value_ * scale;
  // floor(scaled) and remainder in [0, 1)
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const mpq_class frac = scaled - mpq_class(q);
  const int c = cmp(frac, mpq_class(1, 2));
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  const bool negative = sgn(q) < 0;
  std::string digits = mpz_class(abs(q)).get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return negative ? "-" + digits : digits;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  value_ += o.value_;
  return *this;
}
ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  value_ -= o.value_;
  return *this;
}
ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  value_ *= o.value_;
  return *this;
}
ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  value_ /= o.value_;
  return *this;
}
ExactScalar ExactScalar::operator-() const {
  ExactScalar r;
  r.value_ = -value_;
  return r;
}

mpz_class big_binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class big_factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace severi
