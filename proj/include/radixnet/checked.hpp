#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace radixnet {

// All counting arithmetic in this library goes through these helpers.
// An out-of-range result throws std::overflow_error naming the operation
// that produced it; values are never wrapped.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b,
                                std::string_view op) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error(std::string(op) +
                              ": 64-bit integer overflow in addition");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b,
                                std::string_view op) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error(std::string(op) +
                              ": 64-bit integer overflow in multiplication");
  }
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp,
                                std::string_view op) {
  if (exp < 0) {
    throw std::invalid_argument(std::string(op) + ": negative exponent");
  }
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    out = checked_mul(out, base, op);
  }
  return out;
}

}  // namespace radixnet
