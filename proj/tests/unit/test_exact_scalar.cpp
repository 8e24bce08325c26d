#include "severi/exact_scalar.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using severi::ExactScalar;

TEST_CASE("canonical text round-trips") {
  for (const char* s : {"0", "7", "-7", "3/4", "-3/4", "123456789012345678901234567890/11"})
    CHECK(ExactScalar::parse(s).str() == s);
  CHECK(ExactScalar(6, 8).str() == "3/4");
  CHECK(ExactScalar(3, -6).str() == "-1/2");
}

TEST_CASE("non-canonical text is rejected") {
  for (const char* s : {"", "-", "+3", "6/8", "3/1", "-0", "01", "1/-2", "1/0", "1.5", " 1", "1/", "/2", "0/5"})
    CHECK_THROWS_AS(ExactScalar::parse(s), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(ExactScalar(1, 8).to_decimal(2) == "0.12");
  CHECK(ExactScalar(3, 8).to_decimal(2) == "0.38");
  CHECK(ExactScalar(-1, 8).to_decimal(2) == "-0.12");
  CHECK(ExactScalar(1, 200).to_decimal(2) == "0.00");
  CHECK(ExactScalar(3, 200).to_decimal(2) == "0.02");
  CHECK(ExactScalar(-1, 200).to_decimal(2) == "0.00");
  CHECK(ExactScalar(2, 3).to_decimal(2) == "0.67");
  CHECK(ExactScalar(5).to_decimal(2) == "5.00");
  CHECK(ExactScalar(49, 6).to_decimal(0) == "8");
  CHECK(ExactScalar(5, 2).to_decimal(0) == "2");
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(ExactScalar(1) / ExactScalar(0), std::domain_error);
  CHECK_THROWS_AS(ExactScalar(1, 0), std::domain_error);
}

TEST_CASE("big integer helpers") {
  CHECK(severi::big_binomial(50, 25) == mpz_class("126410606437752"));
  CHECK(severi::big_binomial(5, 7) == 0);
  CHECK(severi::big_binomial(5, -1) == 0);
  CHECK(severi::big_factorial(0) == 1);
  CHECK(severi::big_factorial(20) == mpz_class("2432902008176640000"));
}

TEST_CASE("field identities on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const ExactScalar a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK(ExactScalar::parse(a.str()) == a);
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK((a < b) == (a.to_double() < b.to_double() || (a != b && a.to_double() == b.to_double() && a < b)));
  }
}
