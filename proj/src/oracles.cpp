#include "severi/oracles.hpp"

#include "severi/errors.hpp"

#include <mutex>
#include <vector>

namespace severi::oracles {

namespace {

ExactScalar poly(std::initializer_list<long> coeffs_high_first, long x, long divisor) {
  mpz_class acc = 0;
  for (long c : coeffs_high_first) acc = acc * x + c;
  return ExactScalar(mpq_class(acc, divisor));
}

}  // namespace

ExactScalar kontsevich_rational(int d) {
  if (d < 1) throw ValidationError("degree must be >= 1");
  static std::mutex mutex;
  static std::vector<mpz_class> table{0, 1};
  std::lock_guard lock(mutex);
  for (long n = static_cast<long>(table.size()); n <= d; ++n) {
    mpz_class sum = 0;
    for (long a = 1; a < n; ++a) {
      const long b = n - a;
      const mpz_class bracket =
          b * big_binomial(3 * n - 4, 3 * a - 2) - a * big_binomial(3 * n - 4, 3 * a - 1);
      sum += table[a] * table[b] * a * a * b * bracket;
    }
    table.push_back(sum);
  }
  return ExactScalar(table[static_cast<std::size_t>(d)]);
}

PencilInvariants pencil_invariants(int d) {
  if (d < 3) throw ValidationError("pencil oracle needs d >= 3");
  const long n = d;
  // S = P^2 blown up at the n^2 base points; S -> P^1 with fibre F = nH - sum E_i.
  const long base_points = n * n;
  const long euler_surface = 3 + base_points;
  const long fibre_genus = (n - 1) * (n - 2) / 2;
  const long euler_fibre = 2 - 2 * fibre_genus;
  // chi(S) = chi(P^1) chi(F) + #(nodal fibres), each node adding one.
  const long nodal = euler_surface - 2 * euler_fibre;

  // K_S = -3H + sum E_i; omega_{S/P^1} = K_S + 2F.
  const long k_squared = 9 - base_points;
  const long k_dot_f = -3 * n + base_points;
  const long f_squared = n * n - base_points;
  const long kappa = k_squared + 4 * k_dot_f + 4 * f_squared;

  // Noether: 12 lambda = kappa + delta.
  if ((nodal + kappa) % 12 != 0)
    throw InternalConsistencyError("pencil oracle: kappa + delta = " + std::to_string(nodal + kappa) +
                                   " is not divisible by 12 at d = " + std::to_string(d));
  return PencilInvariants{ExactScalar(nodal), ExactScalar(kappa), ExactScalar((nodal + kappa) / 12)};
}

ExactScalar lambda_one_node(int d) {
  const long x = d;
  return ExactScalar(mpq_class(mpz_class(3) * (x - 1) * (x - 2) * (x - 3) * (x + 1), 2));
}

ExactScalar b_one_node(int d) {
  const long x = d;
  return ExactScalar(mpz_class(mpz_class(3) * (x - 1) * (2 * x * x - 5 * x + 1)));
}

ExactScalar cusp_locus_degree(int d) {
  const long x = d;
  return ExactScalar(mpz_class(mpz_class(12) * (x - 1) * (x - 2)));
}

ExactScalar tacnode_locus_degree(int d) { return poly({50, -192, 168}, d, 1); }

ExactScalar triple_point_locus_degree(int d) {
  const long x = d;
  return ExactScalar(mpz_class(mpz_class(15) * (x - 2) * (x - 2)));
}

ExactScalar two_node_degree(int d) {
  const long x = d;
  return ExactScalar(mpq_class(mpz_class(3) * (x - 1) * (x - 2) * (3 * x * x - 3 * x - 11), 2));
}

ExactScalar printed_two_node_degree(int d) { return poly({9, -36, 12, 81, -33}, d, 2); }

ExactScalar printed_lambda_two_node(int d) { return poly({9, -63, 66, 333, -553, -480, 828}, d, 4); }

}  // namespace severi::oracles
