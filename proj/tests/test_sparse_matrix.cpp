#include <doctest.h>

#include <random>
#include <stdexcept>

#include "radixnet/mixed_radix.hpp"
#include "radixnet/sparse_matrix.hpp"
#include "support.hpp"

using radixnet::SparseIntMatrix;
using Entry = SparseIntMatrix::Entry;

TEST_CASE("from_entries canonicalizes and validates") {
  const auto m = SparseIntMatrix::from_entries(
      2, 3, {{1, 2, 5}, {0, 1, 1}, {1, 0, 2}, {0, 2, 0}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.nnz() == 3);  // the zero-valued entry is dropped
  CHECK(m.entries() ==
        std::vector<Entry>{{0, 1, 1}, {1, 0, 2}, {1, 2, 5}});
  CHECK(m.value_at(0, 1) == 1);
  CHECK(m.value_at(0, 0) == 0);

  CHECK_THROWS_AS(SparseIntMatrix::from_entries(2, 2, {{0, 0, 1}, {0, 0, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SparseIntMatrix::from_entries(2, 2, {{0, 0, -1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SparseIntMatrix::from_entries(2, 2, {{2, 0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SparseIntMatrix::from_entries(2, 2, {{0, -1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("shift_matrix") {
  CHECK(radixnet::shift_matrix(4, 0) == SparseIntMatrix::identity(4));
  CHECK(radixnet::shift_matrix(3, 3) == SparseIntMatrix::identity(3));
  CHECK(radixnet::shift_matrix(3, 1).entries() ==
        std::vector<Entry>{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  CHECK_THROWS_AS(radixnet::shift_matrix(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(radixnet::shift_matrix(3, -1), std::invalid_argument);
}

TEST_CASE("shift_matrix equals repeated unit shifts") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    SparseIntMatrix power = SparseIntMatrix::identity(n);
    for (std::int64_t s = 0; s <= 2 * n; ++s) {
      CHECK(radixnet::shift_matrix(n, s) == power);
      power = radixnet::matmul(power, radixnet::shift_matrix(n, 1));
    }
  }
}

TEST_CASE("ones_matrix") {
  CHECK(radixnet::ones_matrix(1, 1).entries() == std::vector<Entry>{{0, 0, 1}});
  const auto m = radixnet::ones_matrix(2, 3);
  CHECK(m.nnz() == 6);
  for (const auto& e : m.entries()) {
    CHECK(e.value == 1);
  }
  CHECK(radixnet::ones_matrix(3, 1).entries() ==
        std::vector<Entry>{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}});
  CHECK_THROWS_AS(radixnet::ones_matrix(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(radixnet::ones_matrix(2, 0), std::invalid_argument);
}

TEST_CASE("kron basics") {
  const auto b = SparseIntMatrix::from_entries(2, 2, {{0, 0, 1}, {1, 1, 2}});

  // identity factor gives a block diagonal
  const auto block = radixnet::kron(SparseIntMatrix::identity(2), b);
  CHECK(block.rows() == 4);
  CHECK(block.cols() == 4);
  CHECK(block.nnz() == 4);
  CHECK(block.value_at(0, 0) == 1);
  CHECK(block.value_at(1, 1) == 2);
  CHECK(block.value_at(2, 2) == 1);
  CHECK(block.value_at(3, 3) == 2);
  CHECK(block.value_at(0, 2) == 0);

  const auto k =
      radixnet::kron(radixnet::ones_matrix(2, 2), radixnet::shift_matrix(2, 1));
  CHECK(k.entries() == std::vector<Entry>{{0, 1, 1},
                                          {0, 3, 1},
                                          {1, 0, 1},
                                          {1, 2, 1},
                                          {2, 1, 1},
                                          {2, 3, 1},
                                          {3, 0, 1},
                                          {3, 2, 1}});

  // a scalar one is the Kronecker unit
  const auto a = SparseIntMatrix::from_entries(2, 3, {{0, 2, 7}, {1, 0, 1}});
  CHECK(radixnet::kron(a, radixnet::ones_matrix(1, 1)) == a);
  CHECK(radixnet::kron(radixnet::ones_matrix(1, 1), a) == a);
}

TEST_CASE("kron rejects overflowing dimensions") {
  const auto tall = SparseIntMatrix::zero(std::int64_t{1} << 40, 1);
  CHECK_THROWS_AS(radixnet::kron(tall, tall), std::overflow_error);
}

TEST_CASE("kron is associative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::int64_t> dim(1, 4);
    const auto a = radixnet::test::random_matrix(rng, dim(rng), dim(rng), 3);
    const auto b = radixnet::test::random_matrix(rng, dim(rng), dim(rng), 3);
    const auto c = radixnet::test::random_matrix(rng, dim(rng), dim(rng), 3);
    CHECK(radixnet::kron(radixnet::kron(a, b), c) ==
          radixnet::kron(a, radixnet::kron(b, c)));
  }
}

TEST_CASE("matmul basics") {
  const auto b = SparseIntMatrix::from_entries(3, 2, {{0, 1, 4}, {2, 0, 5}});
  CHECK(radixnet::matmul(SparseIntMatrix::identity(3), b) == b);

  const auto all3 =
      radixnet::matmul(radixnet::ones_matrix(2, 3), radixnet::ones_matrix(3, 2));
  CHECK(all3.nnz() == 4);
  for (const auto& e : all3.entries()) {
    CHECK(e.value == 3);
  }

  CHECK_THROWS_AS(
      radixnet::matmul(radixnet::ones_matrix(2, 3), radixnet::ones_matrix(2, 2)),
      std::invalid_argument);
}

TEST_CASE("matmul reports overflow instead of wrapping") {
  const std::int64_t big = std::int64_t{1} << 62;
  const auto a = SparseIntMatrix::from_entries(1, 1, {{0, 0, big}});
  const auto four = SparseIntMatrix::from_entries(1, 1, {{0, 0, 4}});
  CHECK_THROWS_AS(radixnet::matmul(a, four), std::overflow_error);

  // overflow in accumulation, not in a single product
  const auto row = SparseIntMatrix::from_entries(1, 2, {{0, 0, big}, {0, 1, big}});
  const auto col = SparseIntMatrix::from_entries(2, 1, {{0, 0, 2}, {1, 0, 2}});
  CHECK_THROWS_AS(radixnet::matmul(row, col), std::overflow_error);
}

TEST_CASE("mixed-product property on random quadruples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t m = dim(rng), k = dim(rng), p = dim(rng);
    const std::int64_t m2 = dim(rng), k2 = dim(rng), p2 = dim(rng);
    const auto a = radixnet::test::random_matrix(rng, m, k, 3);
    const auto c = radixnet::test::random_matrix(rng, k, p, 3);
    const auto b = radixnet::test::random_matrix(rng, m2, k2, 3);
    const auto d = radixnet::test::random_matrix(rng, k2, p2, 3);
    CHECK(radixnet::matmul(radixnet::kron(a, b), radixnet::kron(c, d)) ==
          radixnet::kron(radixnet::matmul(a, c), radixnet::matmul(b, d)));
  }
}

TEST_CASE("chained matmul counts paths in random layered graphs") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::int64_t> node_count(1, 6);
  std::uniform_int_distribution<int> layer_count(2, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int layers = layer_count(rng);
    std::vector<std::int64_t> sizes;
    for (int i = 0; i <= layers - 1; ++i) {
      sizes.push_back(node_count(rng));
    }
    std::vector<SparseIntMatrix> chain;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
      chain.push_back(
          radixnet::test::random_matrix(rng, sizes[i], sizes[i + 1], 1));
    }
    SparseIntMatrix product = chain.front();
    for (std::size_t i = 1; i < chain.size(); ++i) {
      product = radixnet::matmul(product, chain[i]);
    }
    for (std::int64_t u = 0; u < sizes.front(); ++u) {
      for (std::int64_t v = 0; v < sizes.back(); ++v) {
        CHECK(product.value_at(u, v) ==
              radixnet::test::reference_path_count(chain, u, v));
      }
    }
  }
}

TEST_CASE("is_constant") {
  const auto threes = SparseIntMatrix::from_entries(
      2, 2, {{0, 0, 3}, {0, 1, 3}, {1, 0, 3}, {1, 1, 3}});
  CHECK(radixnet::is_constant(threes) == 3);
  CHECK(radixnet::is_constant(SparseIntMatrix::identity(2)) == std::nullopt);
  CHECK(radixnet::is_constant(SparseIntMatrix::zero(4, 5)) == 0);
  CHECK(radixnet::is_constant(radixnet::ones_matrix(3, 2)) == 1);

  // product of the three submatrices of system (2,2,2) is all ones
  const radixnet::MixedRadixSystem system({2, 2, 2});
  auto product = radixnet::layer_submatrix(system, 1);
  for (std::int64_t i = 2; i <= 3; ++i) {
    product = radixnet::matmul(product, radixnet::layer_submatrix(system, i));
  }
  CHECK(radixnet::is_constant(product) == 1);
}
