#pragma once

#include "severi/exact_scalar.hpp"
#include "severi/memo_store.hpp"
#include "severi/quantity.hpp"
#include "severi/tangency.hpp"

#include <memory>
#include <span>
#include <vector>

namespace severi {

/// (1/12) * sum_k (beta'_k - beta_k)(k^2 - 1), the per-branch weight of the
/// tacnodal indeterminacy correction in the Hodge-degree recursion.
/// Throws ValidationError unless beta <= beta' componentwise.
ExactScalar discrepancy_coefficient(const TangencySequence& beta, const TangencySequence& beta_prime);

struct Request {
  Quantity quantity = Quantity::SeveriDegree;
  SeveriKey key;
};

/// Memoized evaluator for the degree N, the Hodge degree L and the B-number
/// of generalized Severi varieties.
///
/// All three satisfy recursions whose first-kind terms keep d and lower |beta|
/// and whose remaining terms drop to degree d-1. Evaluation therefore runs in
/// two phases without call-stack recursion: a work-list discovers every
/// missing (quantity, key) below the request, then keys are evaluated level by
/// level in increasing (d, |beta|) order. Keys within one level are
/// independent and are spread over worker threads.
///
/// Base cases in degree one: N = 1 (delta = 0), L = 0, B = -1. Keys outside
/// the recursion's range evaluate to zero.
class RecursionEngine {
 public:
  explicit RecursionEngine(std::shared_ptr<MemoStore> store = std::make_shared<MemoStore>(),
                           unsigned parallelism = 0);

  /// User entry points: validate the key (ValidationError) and evaluate.
  ExactScalar severi_degree(const SeveriKey& key);
  ExactScalar lambda_degree(const SeveriKey& key);
  ExactScalar b_number(const SeveriKey& key);
  ExactScalar evaluate(Quantity q, const SeveriKey& key);

  /// Internal entry point: zero for keys outside the range, no validation.
  ExactScalar value(Quantity q, const SeveriKey& key);

  /// Computes and memoizes every requested value.
  void ensure(std::span<const Request> requests);

  MemoStore& store() { return *store_; }
  const std::shared_ptr<MemoStore>& shared_store() const { return store_; }
  unsigned parallelism() const { return parallelism_; }

 private:
  ExactScalar compute(Quantity q, const SeveriKey& key) const;

  std::shared_ptr<MemoStore> store_;
  unsigned parallelism_;
};

/// Every (quantity, key) a value directly depends on, in term order.
std::vector<Request> direct_dependencies(Quantity q, const SeveriKey& key);

struct MemoMismatch {
  MemoRecord stored;
  ExactScalar recomputed;
};

/// Recomputes every record of `store` from scratch in a fresh store and
/// returns the records whose values differ.
std::vector<MemoMismatch> verify_memo(const MemoStore& store, unsigned parallelism = 0);

}  // namespace severi
