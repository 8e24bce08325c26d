#pragma once

#include "severi/irreducible.hpp"
#include "severi/memo_store.hpp"
#include "severi/recursion.hpp"

#include <memory>

namespace severi {

/// Bundles a memo store with the evaluators layered on top of it.
class Session {
 public:
  explicit Session(unsigned parallelism = 0, std::shared_ptr<MemoStore> store = std::make_shared<MemoStore>())
      : store_(std::move(store)), engine_(store_, parallelism), irreducible_(engine_) {}

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  MemoStore& store() { return *store_; }
  RecursionEngine& engine() { return engine_; }
  IrreducibleCalculator& irreducible() { return irreducible_; }
  unsigned parallelism() const { return engine_.parallelism(); }

 private:
  std::shared_ptr<MemoStore> store_;
  RecursionEngine engine_;
  IrreducibleCalculator irreducible_;
};

}  // namespace severi
