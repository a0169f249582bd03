#include "radixnet/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "radixnet/checked.hpp"

namespace radixnet {

namespace {

bool entry_pos_less(const SparseIntMatrix::Entry& a,
                    const SparseIntMatrix::Entry& b) {
  return a.row < b.row || (a.row == b.row && a.col < b.col);
}

}  // namespace

SparseIntMatrix::SparseIntMatrix(Canonical, std::int64_t rows,
                                 std::int64_t cols,
                                 std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {}

SparseIntMatrix SparseIntMatrix::from_entries(std::int64_t rows,
                                              std::int64_t cols,
                                              std::vector<Entry> entries) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("SparseIntMatrix: negative dimension");
  }
  std::sort(entries.begin(), entries.end(), entry_pos_less);
  std::vector<Entry> kept;
  kept.reserve(entries.size());
  for (const Entry& e : entries) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) {
      throw std::invalid_argument(
          "SparseIntMatrix: entry (" + std::to_string(e.row) + ", " +
          std::to_string(e.col) + ") outside " + std::to_string(rows) + "x" +
          std::to_string(cols));
    }
    if (e.value < 0) {
      throw std::invalid_argument(
          "SparseIntMatrix: negative value at (" + std::to_string(e.row) +
          ", " + std::to_string(e.col) + ")");
    }
    if (e.value == 0) {
      continue;
    }
    if (!kept.empty() && kept.back().row == e.row && kept.back().col == e.col) {
      throw std::invalid_argument(
          "SparseIntMatrix: duplicate entry at (" + std::to_string(e.row) +
          ", " + std::to_string(e.col) + ")");
    }
    kept.push_back(e);
  }
  return SparseIntMatrix(Canonical{}, rows, cols, std::move(kept));
}

SparseIntMatrix SparseIntMatrix::zero(std::int64_t rows, std::int64_t cols) {
  return from_entries(rows, cols, {});
}

SparseIntMatrix SparseIntMatrix::identity(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("identity: dimension must be positive");
  }
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    entries.push_back({i, i, 1});
  }
  return SparseIntMatrix(Canonical{}, n, n, std::move(entries));
}

std::int64_t SparseIntMatrix::value_at(std::int64_t row,
                                       std::int64_t col) const {
  const Entry probe{row, col, 0};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe,
                             entry_pos_less);
  if (it != entries_.end() && it->row == row && it->col == col) {
    return it->value;
  }
  return 0;
}

std::vector<std::size_t> SparseIntMatrix::row_offsets() const {
  std::vector<std::size_t> offsets(static_cast<std::size_t>(rows_) + 1, 0);
  for (const Entry& e : entries_) {
    ++offsets[static_cast<std::size_t>(e.row) + 1];
  }
  for (std::size_t r = 1; r < offsets.size(); ++r) {
    offsets[r] += offsets[r - 1];
  }
  return offsets;
}

SparseIntMatrix shift_matrix(std::int64_t n, std::int64_t shift) {
  if (n < 1) {
    throw std::invalid_argument("shift_matrix: dimension must be positive");
  }
  if (shift < 0) {
    throw std::invalid_argument("shift_matrix: shift must be nonnegative");
  }
  const std::int64_t s = shift % n;
  std::vector<SparseIntMatrix::Entry> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    entries.push_back({j, (j + s) % n, 1});
  }
  return SparseIntMatrix(SparseIntMatrix::Canonical{}, n, n,
                         std::move(entries));
}

SparseIntMatrix ones_matrix(std::int64_t rows, std::int64_t cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("ones_matrix: dimensions must be positive");
  }
  checked_mul(rows, cols, "ones_matrix");
  std::vector<SparseIntMatrix::Entry> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) {
      entries.push_back({r, c, 1});
    }
  }
  return SparseIntMatrix(SparseIntMatrix::Canonical{}, rows, cols,
                         std::move(entries));
}

SparseIntMatrix kron(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  const std::int64_t rows = checked_mul(a.rows(), b.rows(), "kron");
  const std::int64_t cols = checked_mul(a.cols(), b.cols(), "kron");
  checked_mul(a.nnz(), b.nnz(), "kron");

  const auto a_offsets = a.row_offsets();
  const auto b_offsets = b.row_offsets();
  const auto& ae = a.entries();
  const auto& be = b.entries();

  std::vector<SparseIntMatrix::Entry> entries;
  entries.reserve(static_cast<std::size_t>(a.nnz()) *
                  static_cast<std::size_t>(b.nnz()));
  // Row-of-a outer, row-of-b next, columns ascending inside: this emits the
  // canonical order directly.
  for (std::int64_t ia = 0; ia < a.rows(); ++ia) {
    for (std::int64_t ib = 0; ib < b.rows(); ++ib) {
      const std::int64_t row = ia * b.rows() + ib;
      for (std::size_t pa = a_offsets[ia]; pa < a_offsets[ia + 1]; ++pa) {
        for (std::size_t pb = b_offsets[ib]; pb < b_offsets[ib + 1]; ++pb) {
          entries.push_back({row, ae[pa].col * b.cols() + be[pb].col,
                             checked_mul(ae[pa].value, be[pb].value, "kron")});
        }
      }
    }
  }
  return SparseIntMatrix(SparseIntMatrix::Canonical{}, rows, cols,
                         std::move(entries));
}

SparseIntMatrix matmul(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument(
        "matmul: dimension mismatch, " + std::to_string(a.rows()) + "x" +
        std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
        std::to_string(b.cols()));
  }
  const auto a_offsets = a.row_offsets();
  const auto b_offsets = b.row_offsets();
  const auto& ae = a.entries();
  const auto& be = b.entries();

  std::vector<std::int64_t> accum(static_cast<std::size_t>(b.cols()), 0);
  std::vector<std::int64_t> touched;
  std::vector<SparseIntMatrix::Entry> entries;

  for (std::int64_t i = 0; i < a.rows(); ++i) {
    touched.clear();
    for (std::size_t pa = a_offsets[i]; pa < a_offsets[i + 1]; ++pa) {
      const std::int64_t k = ae[pa].col;
      const std::int64_t va = ae[pa].value;
      for (std::size_t pb = b_offsets[k]; pb < b_offsets[k + 1]; ++pb) {
        const std::int64_t j = be[pb].col;
        if (accum[j] == 0) {
          touched.push_back(j);
        }
        accum[j] = checked_add(accum[j],
                               checked_mul(va, be[pb].value, "matmul"),
                               "matmul");
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::int64_t j : touched) {
      entries.push_back({i, j, accum[j]});
      accum[j] = 0;
    }
  }
  return SparseIntMatrix(SparseIntMatrix::Canonical{}, a.rows(), b.cols(),
                         std::move(entries));
}

std::optional<std::int64_t> is_constant(const SparseIntMatrix& a) {
  if (a.entries().empty()) {
    return 0;
  }
  const std::int64_t v = a.entries().front().value;
  for (const auto& e : a.entries()) {
    if (e.value != v) {
      return std::nullopt;
    }
  }
  const auto dense =
      static_cast<__int128>(a.rows()) * static_cast<__int128>(a.cols());
  if (static_cast<__int128>(a.nnz()) != dense) {
    return std::nullopt;
  }
  return v;
}

}  // namespace radixnet
