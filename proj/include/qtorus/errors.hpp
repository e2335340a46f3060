#pragma once

#include <stdexcept>
#include <string>

namespace qtorus {

// Error categories map one-to-one onto CLI exit codes:
// ConfigError -> 1, InvariantViolation -> 2, ResourceLimit -> 3.

// Invalid arguments, malformed specs, bad configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical invariant the library guarantees was found broken.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a documented size/memory ceiling.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qtorus
