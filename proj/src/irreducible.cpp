#include "severi/irreducible.hpp"

#include "severi/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace severi {

namespace {

int binom2(int n) { return n * (n - 1) / 2; }

void check_degree(int d) {
  if (d < 1) throw ValidationError("degree must be >= 1, got " + std::to_string(d));
}

void check_irreducible_range(int d, int delta) {
  check_degree(d);
  if (delta < 0 || delta > binom2(d - 1))
    throw ValidationError("delta = " + std::to_string(delta) + " outside [0, binom(d-1,2)] for d = " +
                          std::to_string(d));
}

// (sum of sizes)! / prod(sizes!)
mpz_class multinomial(const std::vector<long>& sizes) {
  long total = 0;
  for (long s : sizes) total += s;
  mpz_class r = big_factorial(total);
  for (long s : sizes) r /= big_factorial(s);
  return r;
}

}  // namespace

long ComponentSplit::symmetry() const {
  long sym = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (long m = 2; m <= static_cast<long>(j - i); ++m) sym *= m;
    i = j;
  }
  return sym;
}

std::vector<ComponentSplit> component_splits(int d, int delta) {
  std::vector<ComponentSplit> out;
  if (d < 2 || delta < 0) return out;

  // Degrees as non-increasing partitions of d with at least two parts.
  std::vector<std::vector<int>> degree_partitions;
  std::vector<int> current;
  std::function<void(int, int)> partitions = [&](int rem, int max_part) {
    if (rem == 0) {
      if (current.size() >= 2) degree_partitions.push_back(current);
      return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      current.push_back(p);
      partitions(rem - p, p);
      current.pop_back();
    }
  };
  partitions(d, d);

  for (const auto& degrees : degree_partitions) {
    int cross = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      for (std::size_t j = i + 1; j < degrees.size(); ++j) cross += degrees[i] * degrees[j];
    const int remaining = delta - cross;
    if (remaining < 0) continue;

    // Distribute the remaining nodes; equal degrees get non-increasing node
    // counts so each multiset is produced once.
    std::vector<ComponentPart> parts(degrees.size());
    std::function<void(std::size_t, int)> distribute = [&](std::size_t i, int rem) {
      if (i == degrees.size()) {
        if (rem == 0) out.push_back(ComponentSplit{parts});
        return;
      }
      int cap = std::min(rem, binom2(degrees[i]));
      if (i > 0 && degrees[i] == degrees[i - 1]) cap = std::min(cap, parts[i - 1].delta);
      for (int x = cap; x >= 0; --x) {
        parts[i] = ComponentPart{degrees[i], x};
        distribute(i + 1, rem - x);
      }
    };
    distribute(0, remaining);
  }
  std::sort(out.begin(), out.end(), [](const ComponentSplit& a, const ComponentSplit& b) {
    return a.parts < b.parts;
  });
  return out;
}

ExactScalar IrreducibleCalculator::severi_degree_irr(int d, int delta) {
  check_degree(d);
  if (delta < 0 || delta > binom2(d))
    throw ValidationError("delta = " + std::to_string(delta) + " outside [0, binom(d,2)] for d = " +
                          std::to_string(d));
  return n_irr(d, delta);
}

ExactScalar IrreducibleCalculator::lambda_degree_irr(int d, int delta) {
  check_irreducible_range(d, delta);
  return l_irr(d, delta);
}

ExactScalar IrreducibleCalculator::n_irr(int d, int delta) {
  if (d < 1 || delta < 0 || delta > binom2(d)) return ExactScalar{};
  {
    std::lock_guard lock(mutex_);
    if (auto it = n_cache_.find({d, delta}); it != n_cache_.end()) return it->second;
  }
  ExactScalar result = engine_.value(Quantity::SeveriDegree, SeveriKey::plain(d, delta));
  const long points = 3L * d + (binom2(d - 1) - delta) - 1;
  for (const ComponentSplit& split : component_splits(d, delta)) {
    ExactScalar product(1);
    std::vector<long> sizes;
    for (const ComponentPart& p : split.parts) {
      product *= n_irr(p.d, p.delta);
      if (product.is_zero()) break;
      sizes.push_back(p.dimension());
    }
    if (product.is_zero()) continue;
    mpz_class ways = multinomial(sizes);
    if (mpz_class(std::accumulate(sizes.begin(), sizes.end(), 0L)) != points)
      throw InternalConsistencyError("split dimensions do not add up for d=" + std::to_string(d));
    result -= product * ExactScalar(mpq_class(ways, split.symmetry()));
  }
  if (!result.is_integer() || result.sign() < 0)
    throw InternalConsistencyError("irreducible degree (" + std::to_string(d) + "," + std::to_string(delta) +
                                   ") = " + result.str() + " is not a non-negative integer");
  std::lock_guard lock(mutex_);
  return n_cache_.try_emplace({d, delta}, result).first->second;
}

ExactScalar IrreducibleCalculator::l_irr(int d, int delta) {
  if (d < 1 || delta < 0 || delta > binom2(d - 1)) return ExactScalar{};
  {
    std::lock_guard lock(mutex_);
    if (auto it = l_cache_.find({d, delta}); it != l_cache_.end()) return it->second;
  }
  ExactScalar result = engine_.value(Quantity::LambdaDegree, SeveriKey::plain(d, delta));
  for (const ComponentSplit& split : component_splits(d, delta)) {
    const auto& parts = split.parts;
    std::vector<ExactScalar> fixed(parts.size());
    bool all_irreducible = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].delta > binom2(parts[i].d - 1)) {
        all_irreducible = false;
        break;
      }
      fixed[i] = n_irr(parts[i].d, parts[i].delta);
    }
    if (!all_irreducible) continue;
    // Part r moves in a pencil (one point fewer); the others are fixed.
    for (std::size_t r = 0; r < parts.size(); ++r) {
      ExactScalar term = l_irr(parts[r].d, parts[r].delta);
      if (term.is_zero()) continue;
      std::vector<long> sizes;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        sizes.push_back(parts[i].dimension() - (i == r ? 1 : 0));
        if (i != r) term *= fixed[i];
      }
      if (term.is_zero()) continue;
      result -= term * ExactScalar(mpq_class(multinomial(sizes), split.symmetry()));
    }
  }
  std::lock_guard lock(mutex_);
  return l_cache_.try_emplace({d, delta}, result).first->second;
}

ExactScalar IrreducibleCalculator::boundary_degree_irr(int d, int delta) {
  check_irreducible_range(d, delta);
  ExactScalar total = ExactScalar(delta + 1) * n_irr(d, delta + 1);
  // Limits that break into two components: one branch per intersection node.
  for (const ComponentSplit& split : component_splits(d, delta + 1)) {
    if (split.parts.size() != 2) continue;
    const ComponentPart& a = split.parts[0];
    const ComponentPart& b = split.parts[1];
    ExactScalar product = n_irr(a.d, a.delta) * n_irr(b.d, b.delta);
    if (product.is_zero()) continue;
    const mpz_class ways = multinomial({a.dimension(), b.dimension()});
    total += product * ExactScalar(mpq_class(ways * (a.d * b.d), split.symmetry()));
  }
  return total;
}

}  // namespace severi
