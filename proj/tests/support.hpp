#pragma once

// Test-side helpers: deterministic generators plus a reference path
// enumerator that stays independent of the library code it checks.

#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "radixnet/builder.hpp"
#include "radixnet/mixed_radix.hpp"
#include "radixnet/sparse_matrix.hpp"

namespace radixnet::test {

// Counts source-to-sink paths by walking every edge, one parallel edge per
// unit of entry value. Deliberately naive.
inline std::int64_t reference_path_count(std::span<const SparseIntMatrix> chain,
                                         std::int64_t node, std::int64_t sink) {
  if (chain.empty()) {
    return node == sink ? 1 : 0;
  }
  std::int64_t total = 0;
  for (const auto& e : chain.front().entries()) {
    if (e.row != node) {
      continue;
    }
    for (std::int64_t k = 0; k < e.value; ++k) {
      total += reference_path_count(chain.subspan(1), e.col, sink);
    }
  }
  return total;
}

inline SparseIntMatrix random_matrix(std::mt19937& rng, std::int64_t rows,
                                     std::int64_t cols,
                                     std::int64_t max_value) {
  std::uniform_int_distribution<std::int64_t> value(0, max_value);
  std::vector<SparseIntMatrix::Entry> entries;
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      const std::int64_t v = value(rng);
      if (v > 0) {
        entries.push_back({r, c, v});
      }
    }
  }
  return SparseIntMatrix::from_entries(rows, cols, entries);
}

// Ordered sequences of integers >= 2 with product exactly n.
inline std::vector<std::vector<std::int64_t>> ordered_factorizations(
    std::int64_t n, std::int64_t max_len) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current;
  auto rec = [&](auto&& self, std::int64_t remaining) -> void {
    if (remaining == 1) {
      if (!current.empty()) {
        out.push_back(current);
      }
      return;
    }
    if (static_cast<std::int64_t>(current.size()) == max_len) {
      return;
    }
    for (std::int64_t f = 2; f <= remaining; ++f) {
      if (remaining % f == 0) {
        current.push_back(f);
        self(self, remaining / f);
        current.pop_back();
      }
    }
  };
  rec(rec, n);
  return out;
}

// Every radix sequence of length 1..max_len with product <= max_product.
inline std::vector<std::vector<std::int64_t>> all_systems_up_to(
    std::int64_t max_product, std::int64_t max_len) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current;
  auto rec = [&](auto&& self, std::int64_t product) -> void {
    if (!current.empty()) {
      out.push_back(current);
    }
    if (static_cast<std::int64_t>(current.size()) == max_len) {
      return;
    }
    for (std::int64_t f = 2; product * f <= max_product; ++f) {
      current.push_back(f);
      self(self, product * f);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline std::vector<std::int64_t> random_factorization(std::mt19937& rng,
                                                      std::int64_t n) {
  std::vector<std::int64_t> factors;
  while (n > 1) {
    std::vector<std::int64_t> divisors;
    for (std::int64_t f = 2; f <= n; ++f) {
      if (n % f == 0) {
        divisors.push_back(f);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, divisors.size() - 1);
    const std::int64_t f = divisors[pick(rng)];
    factors.push_back(f);
    n /= f;
  }
  return factors;
}

inline RadixNetSpec random_valid_spec(std::mt19937& rng,
                                      std::int64_t max_nprime = 36,
                                      std::int64_t max_systems = 3,
                                      std::int64_t max_width = 4) {
  std::uniform_int_distribution<std::int64_t> nprime_dist(2, max_nprime);
  std::uniform_int_distribution<std::int64_t> systems_dist(1, max_systems);
  const std::int64_t nprime = nprime_dist(rng);
  const std::int64_t count = systems_dist(rng);

  RadixNetSpec spec;
  for (std::int64_t i = 0; i + 1 < count; ++i) {
    spec.systems.emplace_back(random_factorization(rng, nprime));
  }
  std::int64_t final_product = nprime;
  if (count > 1) {
    std::vector<std::int64_t> divisors;
    for (std::int64_t q = 2; q <= nprime; ++q) {
      if (nprime % q == 0) {
        divisors.push_back(q);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, divisors.size() - 1);
    final_product = divisors[pick(rng)];
  }
  spec.systems.emplace_back(random_factorization(rng, final_product));

  std::uniform_int_distribution<std::int64_t> width_dist(1, max_width);
  const std::int64_t layers = spec.radix_count() + 1;
  for (std::int64_t i = 0; i < layers; ++i) {
    spec.widths.push_back(width_dist(rng));
  }
  return spec;
}

}  // namespace radixnet::test
