#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace severi {

/// Contact orders with the fixed line: entry k (1-based) counts contacts of
/// order k. Always stored in canonical form (no trailing zeros), so equality
/// and hashing ignore zero padding.
class TangencySequence {
 public:
  TangencySequence() = default;
  TangencySequence(std::initializer_list<int> entries);
  explicit TangencySequence(std::vector<int> entries);

  /// e_k, the sequence with a single contact of order k.
  static TangencySequence unit(int k);

  /// Entry at 1-based position k; zero beyond the stored length.
  int operator[](int k) const {
    return k >= 1 && static_cast<std::size_t>(k) <= entries_.size() ? entries_[k - 1] : 0;
  }
  std::size_t length() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const int> entries() const { return entries_; }

  /// |s| = sum of entries.
  int total() const;
  /// Is = sum of k * s_k.
  int weight() const;
  /// I^s = product of k^{s_k}.
  std::int64_t power() const;

  /// Componentwise s <= t.
  bool dominated_by(const TangencySequence& t) const;

  TangencySequence operator+(const TangencySequence& o) const;
  /// Componentwise difference; throws ValidationError when an entry would
  /// become negative.
  TangencySequence operator-(const TangencySequence& o) const;

  TangencySequence plus_unit(int k) const;
  TangencySequence minus_unit(int k) const;

  friend bool operator==(const TangencySequence&, const TangencySequence&) = default;
  friend std::strong_ordering operator<=>(const TangencySequence& a, const TangencySequence& b) {
    return a.entries_ <=> b.entries_;
  }

  std::size_t hash() const noexcept;

  /// Comma-separated entries, "" for the empty sequence.
  std::string csv() const;
  /// Parses the csv() form; trailing zeros are accepted and trimmed.
  static TangencySequence parse_csv(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const TangencySequence& s);

 private:
  void trim();

  std::vector<int> entries_;
};

struct SequenceInvariants {
  int size = 0;
  int weight = 0;
  std::int64_t power = 1;

  friend bool operator==(const SequenceInvariants&, const SequenceInvariants&) = default;
};

SequenceInvariants seq_invariants(const TangencySequence& s);

/// Product over i of binom(s_i, t_i); zero as soon as some t_i > s_i.
std::int64_t seq_binom(const TangencySequence& s, const TangencySequence& t);

/// Overflow-checked 64-bit product; throws std::overflow_error.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t binom64(int n, int k);

/// (d, delta, alpha, beta): a generalized Severi variety with alpha fixed
/// and beta moving contacts along the line.
struct SeveriKey {
  int d = 1;
  int delta = 0;
  TangencySequence alpha;
  TangencySequence beta;

  /// The plain key (d, delta, (), (d)): no conditions along the line.
  static SeveriKey plain(int d, int delta);

  /// binom(d-1,2) - delta; negative for some reducible-inclusive keys.
  int genus() const;
  /// 2d + g + |beta| - 1.
  int dimension() const;

  /// True when the recursion assigns this key a possibly nonzero value:
  /// d >= 1, 0 <= delta <= binom(d,2) and I(alpha) + I(beta) = d.
  bool in_range() const;

  /// User entry check; throws ValidationError naming the violated invariant.
  void validate() const;

  friend bool operator==(const SeveriKey&, const SeveriKey&) = default;
  friend std::strong_ordering operator<=>(const SeveriKey&, const SeveriKey&) = default;

  std::size_t hash() const noexcept;
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const SeveriKey& k) { return os << k.str(); }
};

struct SeveriKeyHash {
  std::size_t operator()(const SeveriKey& k) const noexcept { return k.hash(); }
};

struct FirstKindTerm {
  int k = 0;
  SeveriKey child;
  std::int64_t coefficient = 0;

  friend bool operator==(const FirstKindTerm&, const FirstKindTerm&) = default;
};

struct SecondKindTerm {
  int delta = 0;
  TangencySequence alpha;
  TangencySequence beta;
  std::int64_t coefficient = 0;

  friend bool operator==(const SecondKindTerm&, const SecondKindTerm&) = default;
  friend std::strong_ordering operator<=>(const SecondKindTerm&, const SecondKindTerm&) = default;
};

/// Terms k * V(d, delta, alpha + e_k, beta - e_k), one per k with beta_k > 0.
std::vector<FirstKindTerm> first_kind_terms(const SeveriKey& key);

/// Line-splitting terms (delta', alpha', beta') with alpha' <= alpha,
/// beta' >= beta, I(alpha') + I(beta') = d - 1, and
/// |beta' - beta| + delta - delta' = d - codim. Children outside the
/// recursion's range are dropped. Sorted by (delta', alpha', beta').
std::vector<SecondKindTerm> second_kind_terms(const SeveriKey& key, int codim);

/// Visitor form of second_kind_terms used on hot paths. The callback sees
/// (delta', alpha', beta', increment = beta' - beta, coefficient) in a fixed
/// generation order.
void for_each_second_kind_term(
    const SeveriKey& key, int codim,
    const std::function<void(int, const TangencySequence&, const TangencySequence&,
                             const TangencySequence&, std::int64_t)>& visit);

/// All sequences of weight exactly n, in a fixed order.
const std::vector<TangencySequence>& sequences_of_weight(int n);

}  // namespace severi

template <>
struct std::hash<severi::TangencySequence> {
  std::size_t operator()(const severi::TangencySequence& s) const noexcept { return s.hash(); }
};

template <>
struct std::hash<severi::SeveriKey> {
  std::size_t operator()(const severi::SeveriKey& k) const noexcept { return k.hash(); }
};
