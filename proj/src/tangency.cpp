#include "severi/tangency.hpp"

#include "severi/errors.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace severi {

namespace {

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

TangencySequence::TangencySequence(std::initializer_list<int> entries)
    : TangencySequence(std::vector<int>(entries)) {}

TangencySequence::TangencySequence(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw ValidationError("tangency sequence entries must be non-negative");
  trim();
}

TangencySequence TangencySequence::unit(int k) {
  if (k < 1) throw ValidationError("unit sequence index must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(k), 0);
  v.back() = 1;
  TangencySequence s;
  s.entries_ = std::move(v);
  return s;
}

void TangencySequence::trim() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

int TangencySequence::total() const {
  int t = 0;
  for (int e : entries_) t += e;
  return t;
}

int TangencySequence::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) w += static_cast<int>(i + 1) * entries_[i];
  return w;
}

std::int64_t TangencySequence::power() const {
  std::int64_t p = 1;
  for (std::size_t i = 1; i < entries_.size(); ++i)
    for (int j = 0; j < entries_[i]; ++j) p = checked_mul(p, static_cast<std::int64_t>(i + 1));
  return p;
}

bool TangencySequence::dominated_by(const TangencySequence& t) const {
  if (entries_.size() > t.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > t.entries_[i]) return false;
  return true;
}

TangencySequence TangencySequence::operator+(const TangencySequence& o) const {
  TangencySequence r;
  r.entries_.resize(std::max(entries_.size(), o.entries_.size()), 0);
  for (std::size_t i = 0; i < r.entries_.size(); ++i)
    r.entries_[i] = (*this)[static_cast<int>(i + 1)] + o[static_cast<int>(i + 1)];
  r.trim();
  return r;
}

TangencySequence TangencySequence::operator-(const TangencySequence& o) const {
  if (!o.dominated_by(*this))
    throw ValidationError("sequence difference " + csv() + " - " + o.csv() + " has a negative entry");
  TangencySequence r;
  r.entries_ = entries_;
  for (std::size_t i = 0; i < o.entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  r.trim();
  return r;
}

TangencySequence TangencySequence::plus_unit(int k) const {
  TangencySequence r = *this;
  if (r.entries_.size() < static_cast<std::size_t>(k)) r.entries_.resize(static_cast<std::size_t>(k), 0);
  ++r.entries_[static_cast<std::size_t>(k - 1)];
  return r;
}

TangencySequence TangencySequence::minus_unit(int k) const {
  if ((*this)[k] < 1) throw ValidationError("cannot remove a contact of order " + std::to_string(k));
  TangencySequence r = *this;
  --r.entries_[static_cast<std::size_t>(k - 1)];
  r.trim();
  return r;
}

std::size_t TangencySequence::hash() const noexcept {
  std::size_t seed = entries_.size();
  for (int e : entries_) hash_combine(seed, static_cast<std::size_t>(e));
  return seed;
}

std::string TangencySequence::csv() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

TangencySequence TangencySequence::parse_csv(const std::string& text) {
  std::vector<int> v;
  if (text.empty()) return TangencySequence{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
      throw ValidationError("malformed tangency sequence '" + text + "'");
    v.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return TangencySequence(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const TangencySequence& s) { return os << '(' << s.csv() << ')'; }

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit coefficient overflow");
  return r;
}

std::int64_t binom64(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

SequenceInvariants seq_invariants(const TangencySequence& s) {
  return SequenceInvariants{s.total(), s.weight(), s.power()};
}

std::int64_t seq_binom(const TangencySequence& s, const TangencySequence& t) {
  std::int64_t r = 1;
  const std::size_t n = std::max(s.length(), t.length());
  for (std::size_t i = 1; i <= n; ++i) {
    const int top = s[static_cast<int>(i)];
    const int bottom = t[static_cast<int>(i)];
    if (bottom > top) return 0;
    r = checked_mul(r, binom64(top, bottom));
  }
  return r;
}

SeveriKey SeveriKey::plain(int d, int delta) {
  if (d < 1) throw ValidationError("degree must be >= 1");
  return SeveriKey{d, delta, {}, TangencySequence{d}};
}

int SeveriKey::genus() const { return (d - 1) * (d - 2) / 2 - delta; }

int SeveriKey::dimension() const { return 2 * d + genus() + beta.total() - 1; }

bool SeveriKey::in_range() const {
  return d >= 1 && delta >= 0 && delta <= d * (d - 1) / 2 && alpha.weight() + beta.weight() == d;
}

void SeveriKey::validate() const {
  if (d < 1) throw ValidationError("invalid key " + str() + ": degree d must be >= 1");
  if (delta < 0) throw ValidationError("invalid key " + str() + ": node count delta must be >= 0");
  if (delta > d * (d - 1) / 2)
    throw ValidationError("invalid key " + str() + ": delta exceeds binom(d,2) = " +
                          std::to_string(d * (d - 1) / 2));
  if (alpha.weight() + beta.weight() != d)
    throw ValidationError("invalid key " + str() + ": I(alpha) + I(beta) = " +
                          std::to_string(alpha.weight() + beta.weight()) + " differs from d");
}

std::size_t SeveriKey::hash() const noexcept {
  std::size_t seed = static_cast<std::size_t>(d);
  hash_combine(seed, static_cast<std::size_t>(delta));
  hash_combine(seed, alpha.hash());
  hash_combine(seed, beta.hash());
  return seed;
}

std::string SeveriKey::str() const {
  std::ostringstream os;
  os << "(d=" << d << ", delta=" << delta << ", alpha=" << alpha << ", beta=" << beta << ')';
  return os.str();
}

std::vector<FirstKindTerm> first_kind_terms(const SeveriKey& key) {
  std::vector<FirstKindTerm> out;
  for (int k = 1; k <= static_cast<int>(key.beta.length()); ++k) {
    if (key.beta[k] == 0) continue;
    out.push_back(FirstKindTerm{k, SeveriKey{key.d, key.delta, key.alpha.plus_unit(k), key.beta.minus_unit(k)}, k});
  }
  return out;
}

namespace {

void build_weight_sequences(int n, int order, std::vector<int>& current, std::vector<TangencySequence>& out) {
  if (n == 0) {
    out.emplace_back(current);
    return;
  }
  if (order > n) return;
  // Choose multiplicity of parts of size `order`, then recurse on larger parts.
  const std::size_t idx = static_cast<std::size_t>(order - 1);
  if (current.size() <= idx) current.resize(idx + 1, 0);
  for (int m = 0; m * order <= n; ++m) {
    current[idx] = m;
    build_weight_sequences(n - m * order, order + 1, current, out);
  }
  current[idx] = 0;
}

class WeightTable {
 public:
  const std::vector<TangencySequence>& get(int n) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < table_.size()) return table_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= static_cast<std::size_t>(n)) {
      std::vector<TangencySequence> seqs;
      std::vector<int> current;
      build_weight_sequences(static_cast<int>(table_.size()), 1, current, seqs);
      table_.push_back(std::move(seqs));
    }
    return table_[static_cast<std::size_t>(n)];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<std::vector<TangencySequence>> table_;
};

}  // namespace

const std::vector<TangencySequence>& sequences_of_weight(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  static WeightTable table;
  return table.get(n);
}

void for_each_second_kind_term(
    const SeveriKey& key, int codim,
    const std::function<void(int, const TangencySequence&, const TangencySequence&,
                             const TangencySequence&, std::int64_t)>& visit) {
  if (codim != 1 && codim != 2) throw ValidationError("codim must be 1 or 2");
  if (key.d < 2) return;
  const int child_d = key.d - 1;
  const int child_max_delta = child_d * (child_d - 1) / 2;
  const int beta_weight = key.beta.weight();
  const int drop = key.d - codim;  // |beta' - beta| + delta - delta'

  // Odometer over alpha' <= alpha.
  const auto alpha_entries = key.alpha.entries();
  std::vector<int> sub(alpha_entries.size(), 0);
  while (true) {
    const TangencySequence alpha_prime{std::vector<int>(sub)};
    const int rem = child_d - alpha_prime.weight() - beta_weight;
    if (rem >= 0) {
      const std::int64_t alpha_binom = seq_binom(key.alpha, alpha_prime);
      for (const TangencySequence& inc : sequences_of_weight(rem)) {
        const int delta_prime = key.delta - drop + inc.total();
        if (delta_prime < 0 || delta_prime > child_max_delta) continue;
        const TangencySequence beta_prime = key.beta + inc;
        const std::int64_t coef =
            checked_mul(checked_mul(inc.power(), alpha_binom), seq_binom(beta_prime, key.beta));
        visit(delta_prime, alpha_prime, beta_prime, inc, coef);
      }
    }
    std::size_t i = 0;
    while (i < sub.size() && sub[i] == alpha_entries[i]) sub[i++] = 0;
    if (i == sub.size()) break;
    ++sub[i];
  }
}

std::vector<SecondKindTerm> second_kind_terms(const SeveriKey& key, int codim) {
  std::vector<SecondKindTerm> out;
  for_each_second_kind_term(key, codim,
                            [&](int dp, const TangencySequence& ap, const TangencySequence& bp,
                                const TangencySequence&, std::int64_t coef) {
                              out.push_back(SecondKindTerm{dp, ap, bp, coef});
                            });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace severi
