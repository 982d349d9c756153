#pragma once

#include <stdexcept>
#include <string>

namespace lrod {

/// Raised when an input violates a documented precondition (bad rate,
/// mismatched vector lengths, invalid transition matrix, unknown config key).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a result file cannot be written or a config file cannot be read.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace lrod
