#ifndef DIRSET_ERROR_H_
#define DIRSET_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirset {

// Base class of every error raised by the library. The CLI maps the
// concrete subclass onto a process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input or configuration: malformed set descriptors, bad
// parameters, unmet preconditions that the caller controls.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A mathematically undefined operation, e.g. normalizing the zero vector.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation that would exceed a memory or work budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Text input that failed to parse. Carries the 1-based line number when
// one is meaningful (0 otherwise).
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : ConfigError(line == 0 ? what
                              : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dirset

#endif  // DIRSET_ERROR_H_
