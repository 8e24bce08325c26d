#pragma once

// Independent reference values. Nothing here depends on the tangency,
// recursion or memo code: the library links only the exact-scalar type.

#include "severi/exact_scalar.hpp"

#include <string>

namespace severi::oracles {

/// Degree of the variety of rational plane curves of degree d (Kontsevich's
/// recursion). N_1 = 1.
ExactScalar kontsevich_rational(int d);

struct PencilInvariants {
  ExactScalar nodal;   // singular members of a general pencil
  ExactScalar kappa;   // omega_{S/P^1}^2 on the blown-up total space
  ExactScalar lambda;  // (nodal + kappa) / 12

  friend bool operator==(const PencilInvariants&, const PencilInvariants&) = default;
};

/// Invariants of a general pencil of degree-d plane curves, d >= 3, from the
/// plane blown up at the d^2 base points. Throws InternalConsistencyError if
/// Noether's formula fails to produce an integer.
PencilInvariants pencil_invariants(int d);

/// Literature closed forms used as cross-checks.
ExactScalar lambda_one_node(int d);          // (3/2)(d-1)(d-2)(d-3)(d+1)
ExactScalar b_one_node(int d);               // 3(d-1)(2d^2-5d+1)
ExactScalar cusp_locus_degree(int d);        // 12(d-1)(d-2)
ExactScalar tacnode_locus_degree(int d);     // 50d^2 - 192d + 168
ExactScalar triple_point_locus_degree(int d);  // 15(d-2)^2
ExactScalar two_node_degree(int d);          // (3/2)(d-1)(d-2)(3d^2-3d-11)
/// The two-node polynomial as it appears in print,
/// (1/2)(9d^4 - 36d^3 + 12d^2 + 81d - 33); known not to be integral.
ExactScalar printed_two_node_degree(int d);
/// (1/4)(9d^6 - 63d^5 + 66d^4 + 333d^3 - 553d^2 - 480d + 828).
ExactScalar printed_lambda_two_node(int d);

}  // namespace severi::oracles
