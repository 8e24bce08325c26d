#include "severi/recursion.hpp"

#include "severi/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace severi {

ExactScalar discrepancy_coefficient(const TangencySequence& beta, const TangencySequence& beta_prime) {
  if (!beta.dominated_by(beta_prime))
    throw ValidationError("discrepancy coefficient needs beta <= beta' componentwise, got " + beta.csv() +
                          " and " + beta_prime.csv());
  long sum = 0;
  const TangencySequence inc = beta_prime - beta;
  for (int k = 2; k <= static_cast<int>(inc.length()); ++k) sum += static_cast<long>(inc[k]) * (k * k - 1);
  return ExactScalar(sum, 12);
}

namespace {

// Calls visit(child_quantity, child_key, coefficient, twelfth) for every term
// of the recursion for (q, key), d >= 2. `twelfth` marks terms whose
// contribution is divided by 12 (the Hodge-degree correction).
template <class Visit>
void for_each_term(Quantity q, const SeveriKey& key, Visit&& visit) {
  const TangencySequence& beta = key.beta;
  for (int k = 1; k <= static_cast<int>(beta.length()); ++k) {
    if (beta[k] == 0) continue;
    visit(q, SeveriKey{key.d, key.delta, key.alpha.plus_unit(k), beta.minus_unit(k)}, std::int64_t{k}, false);
  }

  for_each_second_kind_term(
      key, 1,
      [&](int dp, const TangencySequence& ap, const TangencySequence& bp, const TangencySequence& inc,
          std::int64_t coef) {
        visit(q, SeveriKey{key.d - 1, dp, ap, bp}, coef, false);
        if (q != Quantity::BNumber) return;
        // Moving contact absorbed into a fixed one on the split-off curve.
        const std::int64_t base = checked_mul(inc.power(), seq_binom(key.alpha, ap));
        for (int k = 1; k <= static_cast<int>(bp.length()); ++k) {
          if (bp[k] == 0) continue;
          TangencySequence reduced = bp.minus_unit(k);
          const std::int64_t b = seq_binom(reduced, beta);
          if (b == 0) continue;
          visit(Quantity::SeveriDegree, SeveriKey{key.d - 1, dp, ap.plus_unit(k), std::move(reduced)},
                checked_mul(2, checked_mul(base, b)), false);
        }
      });

  if (q != Quantity::LambdaDegree) return;
  for_each_second_kind_term(
      key, 2,
      [&](int dp, const TangencySequence& ap, const TangencySequence& bp, const TangencySequence& inc,
          std::int64_t coef) {
        std::int64_t w = 0;
        for (int k = 2; k <= static_cast<int>(inc.length()); ++k) w += std::int64_t{inc[k]} * (k * k - 1);
        if (w == 0) return;
        visit(Quantity::SeveriDegree, SeveriKey{key.d - 1, dp, ap, bp}, checked_mul(coef, w), true);
      });
}

struct RequestKey {
  Quantity quantity;
  SeveriKey key;
  friend bool operator==(const RequestKey&, const RequestKey&) = default;
};

struct RequestKeyHash {
  std::size_t operator()(const RequestKey& r) const noexcept {
    return r.key.hash() * 3 + static_cast<std::size_t>(r.quantity);
  }
};

// Accumulates integer-valued contributions in mpz and falls back to mpq
// only for fractional child values.
struct Accumulator {
  mpz_class integral;
  mpq_class fractional;
  bool has_fraction = false;

  void add(const ExactScalar& v, std::int64_t coef) {
    if (v.is_integer()) {
      mpz_addmul_ui(integral.get_mpz_t(), v.numerator().get_mpz_t(), static_cast<unsigned long>(coef));
    } else {
      fractional += mpq_class(mpz_class(static_cast<unsigned long>(coef))) * v.rational();
      has_fraction = true;
    }
  }

  mpq_class total() const {
    mpq_class t(integral);
    if (has_fraction) t += fractional;
    return t;
  }
};

}  // namespace

RecursionEngine::RecursionEngine(std::shared_ptr<MemoStore> store, unsigned parallelism)
    : store_(std::move(store)),
      parallelism_(parallelism == 0 ? std::max(1u, std::thread::hardware_concurrency()) : parallelism) {
  if (!store_) throw std::invalid_argument("RecursionEngine needs a store");
}

ExactScalar RecursionEngine::severi_degree(const SeveriKey& key) { return evaluate(Quantity::SeveriDegree, key); }
ExactScalar RecursionEngine::lambda_degree(const SeveriKey& key) { return evaluate(Quantity::LambdaDegree, key); }
ExactScalar RecursionEngine::b_number(const SeveriKey& key) { return evaluate(Quantity::BNumber, key); }

ExactScalar RecursionEngine::evaluate(Quantity q, const SeveriKey& key) {
  key.validate();
  return value(q, key);
}

ExactScalar RecursionEngine::value(Quantity q, const SeveriKey& key) {
  if (!key.in_range()) return ExactScalar{};
  if (auto v = store_->get(q, key)) return *v;
  const Request r{q, key};
  ensure(std::span<const Request>(&r, 1));
  return *store_->get(q, key);
}

ExactScalar RecursionEngine::compute(Quantity q, const SeveriKey& key) const {
  if (key.d == 1) {
    switch (q) {
      case Quantity::SeveriDegree: return ExactScalar(key.delta == 0 ? 1 : 0);
      case Quantity::LambdaDegree: return ExactScalar(0);
      case Quantity::BNumber: return ExactScalar(-1);
    }
  }
  Accumulator plain;
  Accumulator twelfths;
  for_each_term(q, key, [&](Quantity cq, const SeveriKey& child, std::int64_t coef, bool twelfth) {
    Accumulator& acc = twelfth ? twelfths : plain;
    const bool found = store_->read(cq, child, [&](const ExactScalar& v) { acc.add(v, coef); });
    if (!found)
      throw std::logic_error("dependency " + std::string(quantity_code(cq)) + child.str() + " of " +
                             std::string(quantity_code(q)) + key.str() + " is not available");
  });
  mpq_class total = plain.total();
  if (q == Quantity::LambdaDegree) total += twelfths.total() / 12;
  return ExactScalar(total);
}

void RecursionEngine::ensure(std::span<const Request> requests) {
  // Discovery: collect every missing (quantity, key) reachable from the requests.
  std::unordered_set<RequestKey, RequestKeyHash> seen;
  std::vector<RequestKey> stack;
  for (const Request& r : requests)
    if (r.key.in_range() && !store_->contains(r.quantity, r.key)) stack.push_back({r.quantity, r.key});

  std::map<std::pair<int, int>, std::vector<RequestKey>> levels;
  while (!stack.empty()) {
    RequestKey node = std::move(stack.back());
    stack.pop_back();
    if (seen.contains(node) || store_->contains(node.quantity, node.key)) continue;
    seen.insert(node);
    if (node.key.d > 1) {
      for_each_term(node.quantity, node.key, [&](Quantity cq, const SeveriKey& child, std::int64_t, bool) {
        RequestKey dep{cq, child};
        if (!seen.contains(dep) && !store_->contains(cq, child)) stack.push_back(std::move(dep));
      });
    }
    levels[{node.key.d, node.key.beta.total()}].push_back(std::move(node));
  }

  for (auto& [level, nodes] : levels) {
    std::sort(nodes.begin(), nodes.end(), [](const RequestKey& a, const RequestKey& b) {
      if (a.quantity != b.quantity) return a.quantity < b.quantity;
      return a.key < b.key;
    });
    const auto evaluate_one = [&](const RequestKey& n) {
      if (store_->contains(n.quantity, n.key)) return;
      store_->put(n.quantity, n.key, compute(n.quantity, n.key));
    };
    const std::size_t workers = std::min<std::size_t>(parallelism_, nodes.size() / 16);
    if (workers <= 1) {
      for (const auto& n : nodes) evaluate_one(n);
      continue;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          try {
            for (std::size_t i = next++; i < nodes.size(); i = next++) evaluate_one(nodes[i]);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = nodes.size();
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
}

std::vector<Request> direct_dependencies(Quantity q, const SeveriKey& key) {
  std::vector<Request> out;
  if (!key.in_range() || key.d == 1) return out;
  for_each_term(q, key, [&](Quantity cq, const SeveriKey& child, std::int64_t, bool) {
    out.push_back(Request{cq, child});
  });
  return out;
}

std::vector<MemoMismatch> verify_memo(const MemoStore& store, unsigned parallelism) {
  const auto records = store.records();
  RecursionEngine fresh(std::make_shared<MemoStore>(), parallelism);
  std::vector<Request> requests;
  requests.reserve(records.size());
  for (const auto& r : records) requests.push_back(Request{r.quantity, r.key});
  fresh.ensure(requests);
  std::vector<MemoMismatch> mismatches;
  for (const auto& r : records) {
    ExactScalar v = fresh.value(r.quantity, r.key);
    if (v != r.value) mismatches.push_back(MemoMismatch{r, std::move(v)});
  }
  return mismatches;
}

}  // namespace severi
