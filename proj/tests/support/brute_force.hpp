#pragma once

// Naive reference enumerations shared by the unit and acceptance tests.

#include "severi/tangency.hpp"

#include <algorithm>
#include <vector>

namespace severi::testing {

// Every sequence of weight <= n, built from bounded coordinate vectors.
inline std::vector<TangencySequence> sequences_up_to_weight(int n) {
  std::vector<TangencySequence> out;
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)), 0);
  auto rec = [&](auto&& self, int pos, int weight) -> void {
    if (pos > n) {
      out.emplace_back(v);
      return;
    }
    for (int c = 0; weight + c * pos <= n; ++c) {
      v[static_cast<std::size_t>(pos - 1)] = c;
      self(self, pos + 1, weight + c * pos);
    }
    v[static_cast<std::size_t>(pos - 1)] = 0;
  };
  rec(rec, 1, 0);
  return out;
}

inline std::vector<SeveriKey> all_keys(int d) {
  std::vector<SeveriKey> keys;
  const auto seqs = sequences_up_to_weight(d);
  for (const auto& a : seqs)
    for (const auto& b : seqs)
      if (a.weight() + b.weight() == d)
        for (int delta = 0; delta <= d * (d - 1) / 2; ++delta) keys.push_back(SeveriKey{d, delta, a, b});
  return keys;
}

inline std::vector<SecondKindTerm> brute_second_kind_terms(const SeveriKey& key, int codim) {
  std::vector<SecondKindTerm> out;
  const int d = key.d;
  if (d < 2) return out;
  const int max_delta = (d - 2) * (d - 1) / 2;
  for (const auto& ap : sequences_up_to_weight(d - 1)) {
    if (!ap.dominated_by(key.alpha)) continue;
    for (const auto& inc : sequences_up_to_weight(d - 1)) {
      const TangencySequence bp = key.beta + inc;
      if (ap.weight() + bp.weight() != d - 1) continue;
      const int dp = key.delta - (d - codim) + inc.total();
      if (dp < 0 || dp > max_delta) continue;
      std::int64_t coef = inc.power();
      for (int k = 1; k <= d; ++k) {
        coef *= binom64(key.alpha[k], ap[k]);
        coef *= binom64(bp[k], key.beta[k]);
      }
      if (coef != 0) out.push_back(SecondKindTerm{dp, ap, bp, coef});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace severi::testing
