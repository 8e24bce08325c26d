#include "severi/errors.hpp"
#include "severi/oracles.hpp"

#include <doctest.h>

using namespace severi;
using namespace severi::oracles;

TEST_CASE("rational curve counts") {
  const std::vector<long> expected{1, 1, 12, 620, 87304, 26312976};
  for (int d = 1; d <= 6; ++d) CHECK(kontsevich_rational(d) == ExactScalar(expected[static_cast<std::size_t>(d - 1)]));
  CHECK_THROWS_AS(kontsevich_rational(0), ValidationError);
}

TEST_CASE("pencil invariants") {
  CHECK(pencil_invariants(3) == PencilInvariants{12, 0, 1});
  CHECK(pencil_invariants(4) == PencilInvariants{27, 9, 3});
  CHECK(pencil_invariants(5) == PencilInvariants{48, 24, 6});
  for (int d = 3; d <= 12; ++d) {
    CHECK(pencil_invariants(d).nodal == 3 * (d - 1) * (d - 1));
    CHECK(pencil_invariants(d).lambda == (d - 1) * (d - 2) / 2);
  }
  CHECK_THROWS_AS(pencil_invariants(2), ValidationError);
}

TEST_CASE("closed forms") {
  CHECK(lambda_one_node(4) == 45);
  CHECK(b_one_node(4) == 117);
  CHECK(cusp_locus_degree(4) == 72);
  CHECK(tacnode_locus_degree(4) == 200);
  CHECK(triple_point_locus_degree(4) == 60);
  CHECK(two_node_degree(4) == 225);
  CHECK(printed_two_node_degree(4) == ExactScalar(483, 2));
  CHECK_FALSE(printed_two_node_degree(5).is_integer());
  CHECK(printed_lambda_two_node(4) == 155);
}
