#include "severi/errors.hpp"
#include "severi/recursion.hpp"

#include <brute_force.hpp>
#include <doctest.h>

using namespace severi;

namespace {
ExactScalar N(RecursionEngine& e, int d, int delta) { return e.severi_degree(SeveriKey::plain(d, delta)); }
ExactScalar L(RecursionEngine& e, int d, int delta) { return e.lambda_degree(SeveriKey::plain(d, delta)); }
ExactScalar B(RecursionEngine& e, int d, int delta) { return e.b_number(SeveriKey::plain(d, delta)); }
}  // namespace

TEST_CASE("known values") {
  RecursionEngine e;
  CHECK(N(e, 3, 1) == 12);
  CHECK(N(e, 4, 1) == 27);
  CHECK(N(e, 4, 3) == 675);
  CHECK(L(e, 4, 1) == 45);
  CHECK(L(e, 4, 0) == 3);
  CHECK(L(e, 5, 0) == 6);
  CHECK(B(e, 3, 1) == 24);
  CHECK(B(e, 4, 1) == 117);
  CHECK(e.b_number(SeveriKey{1, 0, {}, {1}}) == -1);
  CHECK(e.b_number(SeveriKey{1, 0, {1}, {}}) == -1);
  CHECK(e.lambda_degree(SeveriKey{1, 0, {1}, {}}) == 0);
  CHECK(e.severi_degree(SeveriKey{1, 0, {1}, {}}) == 1);
}

TEST_CASE("degree-d curves through the right number of points") {
  RecursionEngine e;
  for (int d = 1; d <= 8; ++d) CHECK(N(e, d, 0) == 1);
  for (int d = 3; d <= 10; ++d) CHECK(N(e, d, 1) == 3 * (d - 1) * (d - 1));
  for (int d = 3; d <= 8; ++d) CHECK(L(e, d, 0) == (d - 1) * (d - 2) / 2);
}

TEST_CASE("discrepancy coefficient") {
  CHECK(discrepancy_coefficient({}, {1}) == 0);
  CHECK(discrepancy_coefficient({}, {0, 1}) == ExactScalar(1, 4));
  CHECK(discrepancy_coefficient({1}, {1, 0, 1}) == ExactScalar(2, 3));
  CHECK_THROWS_AS(discrepancy_coefficient({2}, {1, 1}), ValidationError);
}

TEST_CASE("invalid keys are rejected at entry and vanish internally") {
  RecursionEngine e;
  CHECK_THROWS_AS(e.severi_degree(SeveriKey::plain(4, 7)), ValidationError);
  CHECK_THROWS_AS(e.lambda_degree(SeveriKey::plain(4, -1)), ValidationError);
  CHECK_THROWS_AS(e.b_number(SeveriKey{4, 0, {1}, {2}}), ValidationError);
  CHECK_THROWS_AS(e.severi_degree(SeveriKey{0, 0, {}, {}}), ValidationError);
  CHECK(e.value(Quantity::SeveriDegree, SeveriKey::plain(4, 7)).is_zero());
  CHECK(e.value(Quantity::BNumber, SeveriKey{4, 0, {1}, {2}}).is_zero());
}

TEST_CASE("degrees are non-negative integers and Hodge degrees are integers") {
  RecursionEngine e;
  for (int d = 1; d <= 5; ++d)
    for (const auto& key : testing::all_keys(d)) {
      INFO(key.str());
      const ExactScalar n = e.severi_degree(key);
      CHECK(n.is_integer());
      CHECK(n.sign() >= 0);
      CHECK(e.lambda_degree(key).is_integer());
    }
  for (int d = 3; d <= 7; ++d)
    for (int delta = 0; delta <= d * (d - 1) / 2; ++delta) CHECK(L(e, d, delta).is_integer());
}

TEST_CASE("results do not depend on the worker count") {
  auto serial = std::make_shared<MemoStore>();
  auto parallel = std::make_shared<MemoStore>();
  RecursionEngine one(serial, 1), four(parallel, 4);
  const std::vector<Request> req{{Quantity::LambdaDegree, SeveriKey::plain(8, 6)},
                                 {Quantity::BNumber, SeveriKey::plain(8, 6)},
                                 {Quantity::SeveriDegree, SeveriKey::plain(8, 10)}};
  one.ensure(req);
  four.ensure(req);
  CHECK(serial->records() == parallel->records());
}

TEST_CASE("dependencies are strictly lower") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& key : testing::all_keys(d))
      for (Quantity q : kAllQuantities)
        for (const auto& dep : direct_dependencies(q, key)) {
          const auto below = std::pair{dep.key.d, dep.key.beta.total()} < std::pair{key.d, key.beta.total()};
          CHECK(below);
        }
}

TEST_CASE("tampered memo entries are detected") {
  auto store = std::make_shared<MemoStore>();
  RecursionEngine e(store, 1);
  e.lambda_degree(SeveriKey::plain(5, 2));
  CHECK(verify_memo(*store, 1).empty());
  store->put(Quantity::BNumber, SeveriKey::plain(6, 0), ExactScalar(4));
  const auto bad = verify_memo(*store, 1);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].stored.value == 4);
  CHECK(bad[0].recomputed == 9);
}
