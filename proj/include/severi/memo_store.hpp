#pragma once

#include "severi/exact_scalar.hpp"
#include "severi/quantity.hpp"
#include "severi/tangency.hpp"

#include <array>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace severi {

inline constexpr int kCacheSchemaVersion = 1;

struct MemoRecord {
  Quantity quantity = Quantity::SeveriDegree;
  SeveriKey key;
  ExactScalar value;

  friend bool operator==(const MemoRecord&, const MemoRecord&) = default;
};

/// Renders one cache line: quantity|d|delta|alpha|beta|value.
std::string format_record(const MemoRecord& r);
/// Inverse of format_record; throws CacheLoadError tagged with `line`.
MemoRecord parse_record(const std::string& text, std::size_t line);

/// Concurrent memo table from (quantity, key) to exact value with
/// publish-once semantics. Reads take shared locks on one of several shards;
/// writes take the shard's exclusive lock.
class MemoStore {
 public:
  MemoStore() = default;
  MemoStore(const MemoStore&) = delete;
  MemoStore& operator=(const MemoStore&) = delete;

  std::optional<ExactScalar> get(Quantity q, const SeveriKey& key) const;
  bool contains(Quantity q, const SeveriKey& key) const;

  /// Calls f(const ExactScalar&) under the shard's shared lock when the entry
  /// exists; avoids copying big values on hot paths.
  template <class F>
  bool read(Quantity q, const SeveriKey& key, F&& f) const {
    const Entry e{q, key};
    const Shard& s = shard_for(e);
    std::shared_lock lock(s.mutex);
    const auto it = s.map.find(e);
    if (it == s.map.end()) return false;
    f(it->second);
    return true;
  }

  /// Stores the value; a second put with an identical value is a no-op and a
  /// put with a different value throws IntegrityError naming both.
  void put(Quantity q, const SeveriKey& key, const ExactScalar& value);

  std::size_t size() const;

  /// Every record, sorted by (quantity, d, delta, alpha, beta).
  std::vector<MemoRecord> records() const;

  /// Atomic write: a temp file in the same directory renamed over `path`.
  /// Saves of the same path are serialized across threads and processes.
  void save(const std::filesystem::path& path) const;

  /// Merges a cache file into this store under put() semantics. The whole
  /// file is validated before anything is published.
  void load(const std::filesystem::path& path);

 private:
  struct Entry {
    Quantity quantity;
    SeveriKey key;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  struct EntryHash {
    std::size_t operator()(const Entry& e) const noexcept {
      return e.key.hash() * 3 + static_cast<std::size_t>(e.quantity);
    }
  };
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<Entry, ExactScalar, EntryHash> map;
  };
  static constexpr std::size_t kShards = 64;

  Shard& shard_for(const Entry& e) const { return shards_[EntryHash{}(e) % kShards]; }

  mutable std::array<Shard, kShards> shards_;
};

}  // namespace severi
