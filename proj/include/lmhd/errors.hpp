#pragma once

#include <stdexcept>
#include <string>

namespace lmhd {

/// Rejected input: shape mismatch, out-of-range parameter, grid mismatch.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A run configuration that does not parse or validate.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}
}  // namespace detail

}  // namespace lmhd
