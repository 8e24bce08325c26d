#pragma once

#include <stdexcept>
#include <string>

namespace severi {

// A user-supplied key or argument violates a documented invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Publish-once violation: two different values for the same memo entry.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheLoadError : public std::runtime_error {
 public:
  CacheLoadError(const std::string& what, std::size_t line)
      : std::runtime_error("cache line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The cache file was written by a different schema version.
class SchemaVersionError : public CacheLoadError {
 public:
  SchemaVersionError(const std::string& what, int found)
      : CacheLoadError(what, 1), found_(found) {}

  int found_version() const noexcept { return found_; }

 private:
  int found_;
};

class UnsupportedCombination : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Slope requested for a family with vanishing Hodge degree.
class UndefinedSlope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InsufficientPoints : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An independent computation produced an impossible intermediate value.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace severi
