#include "severi/memo_store.hpp"

#include "severi/errors.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <string_view>
#include <thread>

namespace severi {

namespace {

constexpr std::string_view kHeaderPrefix = "severi-cache v";

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

int parse_int_field(const std::string& s, const char* name, std::size_t line) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos ||
      (s.size() > 1 && s.front() == '0'))
    throw CacheLoadError(std::string("malformed ") + name + " '" + s + "'", line);
  return std::stoi(s);
}

TangencySequence parse_seq_field(const std::string& s, const char* name, std::size_t line) {
  try {
    TangencySequence seq = TangencySequence::parse_csv(s);
    if (seq.csv() != s) throw CacheLoadError(std::string(name) + " is not in canonical form", line);
    return seq;
  } catch (const ValidationError& e) {
    throw CacheLoadError(std::string("malformed ") + name + ": " + e.what(), line);
  }
}

// Serializes save() calls within this process; flock covers other processes.
std::mutex& save_mutex() {
  static std::mutex m;
  return m;
}

class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw std::runtime_error("cannot open lock file " + path.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

std::string format_record(const MemoRecord& r) {
  std::string out;
  out += quantity_code(r.quantity);
  out += '|' + std::to_string(r.key.d) + '|' + std::to_string(r.key.delta) + '|' + r.key.alpha.csv() + '|' +
         r.key.beta.csv() + '|' + r.value.str();
  return out;
}

MemoRecord parse_record(const std::string& text, std::size_t line) {
  const auto fields = split(text, '|');
  if (fields.size() != 6)
    throw CacheLoadError("expected 6 '|'-separated fields, found " + std::to_string(fields.size()), line);
  const auto q = parse_quantity(fields[0]);
  if (!q) throw CacheLoadError("unknown quantity '" + fields[0] + "'", line);
  MemoRecord r;
  r.quantity = *q;
  r.key.d = parse_int_field(fields[1], "d", line);
  r.key.delta = parse_int_field(fields[2], "delta", line);
  r.key.alpha = parse_seq_field(fields[3], "alpha", line);
  r.key.beta = parse_seq_field(fields[4], "beta", line);
  if (!r.key.in_range()) throw CacheLoadError("key " + r.key.str() + " is outside the recursion's range", line);
  try {
    r.value = ExactScalar::parse(fields[5]);
  } catch (const std::invalid_argument& e) {
    throw CacheLoadError(e.what(), line);
  }
  if (r.quantity == Quantity::SeveriDegree && !r.value.is_integer())
    throw CacheLoadError("Severi degree must be an integer", line);
  return r;
}

std::optional<ExactScalar> MemoStore::get(Quantity q, const SeveriKey& key) const {
  const Entry e{q, key};
  const Shard& s = shard_for(e);
  std::shared_lock lock(s.mutex);
  const auto it = s.map.find(e);
  if (it == s.map.end()) return std::nullopt;
  return it->second;
}

bool MemoStore::contains(Quantity q, const SeveriKey& key) const {
  const Entry e{q, key};
  const Shard& s = shard_for(e);
  std::shared_lock lock(s.mutex);
  return s.map.contains(e);
}

void MemoStore::put(Quantity q, const SeveriKey& key, const ExactScalar& value) {
  Entry e{q, key};
  Shard& s = shard_for(e);
  std::unique_lock lock(s.mutex);
  const auto [it, inserted] = s.map.try_emplace(std::move(e), value);
  if (!inserted && it->second != value)
    throw IntegrityError("memo entry " + std::string(quantity_code(q)) + key.str() + " already holds " +
                         it->second.str() + ", refusing " + value.str());
}

std::size_t MemoStore::size() const {
  std::size_t n = 0;
  for (const Shard& s : shards_) {
    std::shared_lock lock(s.mutex);
    n += s.map.size();
  }
  return n;
}

std::vector<MemoRecord> MemoStore::records() const {
  std::vector<MemoRecord> out;
  for (const Shard& s : shards_) {
    std::shared_lock lock(s.mutex);
    for (const auto& [entry, value] : s.map) out.push_back(MemoRecord{entry.quantity, entry.key, value});
  }
  std::sort(out.begin(), out.end(), [](const MemoRecord& a, const MemoRecord& b) {
    if (a.quantity != b.quantity) return a.quantity < b.quantity;
    return a.key < b.key;
  });
  return out;
}

void MemoStore::save(const std::filesystem::path& path) const {
  const auto records_sorted = records();

  std::lock_guard guard(save_mutex());
  std::filesystem::path lock_path = path;
  lock_path += ".lock";
  FileLock file_lock(lock_path);

  static std::atomic<unsigned long> counter{0};
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << kHeaderPrefix << kCacheSchemaVersion << '\n';
    for (const auto& r : records_sorted) out << format_record(r) << '\n';
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("short write to " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

void MemoStore::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache file " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw CacheLoadError("missing header", 1);
  if (!line.starts_with(kHeaderPrefix)) throw CacheLoadError("bad header '" + line + "'", 1);
  const std::string version_text = line.substr(kHeaderPrefix.size());
  if (version_text.empty() || version_text.find_first_not_of("0123456789") != std::string::npos ||
      version_text.size() > 6)
    throw CacheLoadError("bad schema version '" + version_text + "'", 1);
  const int version = std::stoi(version_text);
  if (version != kCacheSchemaVersion)
    throw SchemaVersionError("cache schema v" + std::to_string(version) + " requires migration to v" +
                                 std::to_string(kCacheSchemaVersion),
                             version);

  std::vector<MemoRecord> parsed;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    parsed.push_back(parse_record(line, line_no));
  }
  for (const auto& r : parsed) put(r.quantity, r.key, r.value);
}

}  // namespace severi
