#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gwcell {

/// Invalid query or input data (bad frame, parity mismatch, malformed twist, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by evaluate() when the base-theory table does not cover every requested key.
class MissingKeysError : public DomainError {
 public:
  explicit MissingKeysError(std::vector<std::string> keys);

  const std::vector<std::string>& keys() const noexcept { return keys_; }

 private:
  std::vector<std::string> keys_;
};

}  // namespace gwcell
