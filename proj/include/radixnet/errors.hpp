#pragma once

#include <stdexcept>

namespace radixnet {

/// Thrown when an operation would exceed its documented work guard.
class GuardExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace radixnet
