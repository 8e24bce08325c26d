#pragma once

#include "severi/exact_scalar.hpp"
#include "severi/recursion.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace severi {

struct ComponentPart {
  int d = 1;
  int delta = 0;

  int genus() const { return (d - 1) * (d - 2) / 2 - delta; }
  /// Number of point conditions cutting the part's Severi variety to points.
  int dimension() const { return 3 * d + genus() - 1; }

  friend bool operator==(const ComponentPart&, const ComponentPart&) = default;
  friend auto operator<=>(const ComponentPart&, const ComponentPart&) = default;
};

/// A splitting of a degree-d, delta-nodal curve into k >= 2 components with
/// sum d_i = d and sum delta_i + sum_{i<j} d_i d_j = delta. Parts are stored
/// in non-increasing order, so every multiset appears exactly once.
struct ComponentSplit {
  std::vector<ComponentPart> parts;

  /// Product of mult! over groups of identical parts.
  long symmetry() const;

  friend bool operator==(const ComponentSplit&, const ComponentSplit&) = default;
};

/// Every multiset of k >= 2 parts with delta_i <= binom(d_i, 2) satisfying
/// the degree and node bookkeeping, in lexicographic order of parts.
std::vector<ComponentSplit> component_splits(int d, int delta);

/// Converts the reducible-inclusive quantities of the recursion engine into
/// quantities of the irreducible locus by inclusion-exclusion over splits,
/// memoizing per (d, delta).
class IrreducibleCalculator {
 public:
  explicit IrreducibleCalculator(RecursionEngine& engine) : engine_(engine) {}

  /// N_irr; accepts 0 <= delta <= binom(d,2) and is zero above binom(d-1,2).
  ExactScalar severi_degree_irr(int d, int delta);
  /// L_irr for 0 <= delta <= binom(d-1,2).
  ExactScalar lambda_degree_irr(int d, int delta);
  /// Boundary intersection of the irreducible family, 0 <= delta <= binom(d-1,2).
  ExactScalar boundary_degree_irr(int d, int delta);

  RecursionEngine& engine() { return engine_; }

 private:
  ExactScalar n_irr(int d, int delta);
  ExactScalar l_irr(int d, int delta);

  RecursionEngine& engine_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, ExactScalar> n_cache_;
  std::map<std::pair<int, int>, ExactScalar> l_cache_;
};

}  // namespace severi
