#include "severi/errors.hpp"
#include "severi/moduli.hpp"

#include <doctest.h>

#include <random>

using namespace severi;

TEST_CASE("geometric invariants") {
  const auto check = [](int d, int delta, int g, int dim, int rho) {
    const auto inv = geometric_invariants(d, delta);
    CHECK(inv.genus == g);
    CHECK(inv.dimension == dim);
    CHECK(inv.rho == rho);
  };
  check(4, 1, 2, 13, 2);
  check(5, 2, 4, 18, 1);
  check(11, 31, 14, 46, -1);
  CHECK_THROWS_AS(geometric_invariants(0, 0), ValidationError);
}

TEST_CASE("class vectors") {
  Session s(1);
  const auto v = class_vector(s, 4, 1, FamilyVariant::All);
  CHECK(v.a() == 27);
  CHECK(v.b() == 117);
  CHECK(v.lambda() == 45);
  CHECK(v.boundary() == 450);
  CHECK(v.c() == 90);

  const auto q = class_vector(s, 4, 0, FamilyVariant::Irreducible);
  CHECK(q.a() == 1);
  CHECK(q.lambda() == 3);
  CHECK(q.boundary() == 27);
  CHECK(q.c() == 9);
  CHECK_FALSE(q.has_b());
  CHECK_THROWS_AS(q.b(), UnsupportedCombination);

  CHECK(class_vector(s, 2, 0, FamilyVariant::All).c() == -3);
  CHECK_THROWS_AS(class_vector(s, 4, 7, FamilyVariant::All), ValidationError);
  CHECK_THROWS_AS(class_vector(s, 4, 4, FamilyVariant::Irreducible), ValidationError);
  CHECK_THROWS_AS(ClassVector(1, std::nullopt, 5, 27, 3), InternalConsistencyError);
}

TEST_CASE("singular counts") {
  Session s(1);
  CHECK(singular_counts(s, 4, 1).cusps == 72);
  CHECK(singular_counts(s, 5, 1).cusps == 144);
  for (int d = 3; d <= 9; ++d) CHECK(singular_counts(s, d, 1).cusps == 12 * (d - 1) * (d - 2));
  CHECK(singular_counts(s, 4, 1).tacnodes == 0);
  CHECK(singular_counts(s, 4, 1).triple_points == 0);
  CHECK(singular_counts(s, 4, 0).cusps == 0);
}

TEST_CASE("slopes") {
  Session s(1);
  CHECK(slope(s, 4, 1) == 10);
  CHECK(slope(s, 4, 0) == 9);
  CHECK(slope(s, 5, 1) == ExactScalar(49, 6));
  CHECK_THROWS_AS(slope(s, 3, 1), UndefinedSlope);
  CHECK(brill_noether_slope(3) == 9);
  CHECK(select_degree(2) == 4);
  CHECK(select_degree(10) == 9);
  CHECK(select_degree(12) == 10);
  CHECK(select_degree(21) == 16);
}

TEST_CASE("slope table") {
  Session serial(1), parallel(4);
  const auto rows = slope_table(serial, 2, 9);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].d == 4);
  CHECK(rows[0].delta == 1);
  CHECK(rows[0].rho == 2);
  CHECK(rows[0].slope == ExactScalar(10));
  CHECK(rows[4].slope->to_decimal(2) == "7.76");
  CHECK(rows[2].bound == ExactScalar(42, 5));
  const auto again = slope_table(parallel, 2, 9);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].slope == again[i].slope);
  for (const auto& r : rows)
    if (r.d <= 8) CHECK(r.slope->sign() > 0);
  CHECK_THROWS_AS(slope_table(serial, 1, 3), ValidationError);
  CHECK_THROWS_AS(slope_table(serial, 5, 4), ValidationError);
}

TEST_CASE("interpolation recovers random polynomials") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-50, 50);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ExactScalar> coeffs;
    for (int i = 0; i <= trial % 7; ++i) coeffs.emplace_back(c(rng), 1 + std::abs(c(rng)));
    const Polynomial p(coeffs);
    std::vector<std::pair<ExactScalar, ExactScalar>> pts;
    for (int x = 0; x < 9; ++x) pts.emplace_back(x, p(x));
    const Polynomial fit = interpolate(pts);
    CHECK(fit.coefficients() == p.coefficients());
    const std::vector<ExactScalar> ys = [&] {
      std::vector<ExactScalar> v;
      for (const auto& pt : pts) v.push_back(pt.second);
      return v;
    }();
    if (p.degree() >= 0)
      for (const auto& diff : finite_differences(ys, p.degree() + 1)) CHECK(diff.is_zero());
  }
  CHECK(interpolate({}).degree() == -1);
  const std::vector<std::pair<ExactScalar, ExactScalar>> dup{{1, 2}, {1, 3}};
  CHECK_THROWS_AS(interpolate(dup), ValidationError);
  CHECK(Polynomial({1, -3, 0}).str() == "-3*d + 1");
}

TEST_CASE("polynomial fits of fixed-node families") {
  Session s(1);
  const std::vector<int> l1{4, 5, 6, 7, 8, 9, 10, 11};
  const auto r = polyfit_check(s, 1, Quantity::LambdaDegree, l1);
  CHECK(r.degree_ok);
  CHECK(r.fit.degree() == 4);
  CHECK(r.fit.leading() == ExactScalar(3, 2));
  CHECK(r.leading_ok == true);

  const std::vector<int> l0{3, 4, 5, 6, 7, 8};
  CHECK(polyfit_check(s, 0, Quantity::LambdaDegree, l0).fit.coefficients() ==
        std::vector<ExactScalar>{1, ExactScalar(-3, 2), ExactScalar(1, 2)});

  const std::vector<int> b1{3, 4, 5, 6, 7};
  const auto rb = polyfit_check(s, 1, Quantity::BNumber, b1);
  CHECK(rb.expected_degree == 3);
  CHECK(rb.degree_ok);
  CHECK_FALSE(rb.leading_ok.has_value());

  const std::vector<int> few{4, 5, 6, 7, 8};
  CHECK_THROWS_AS(polyfit_check(s, 1, Quantity::LambdaDegree, few), InsufficientPoints);
  CHECK(expected_lambda_leading(2) == ExactScalar(9, 4));
  CHECK(expected_polynomial_degree(Quantity::SeveriDegree, 3) == 6);
}
