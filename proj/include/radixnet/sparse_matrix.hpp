#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace radixnet {

/// Sparse matrix with nonnegative 64-bit integer entries, stored in
/// coordinate form. Entries are kept in canonical order (sorted by row,
/// then column), never duplicated, and never zero, so two equal matrices
/// have identical entry lists and serialization is deterministic.
///
/// This is the carrier for adjacency submatrices (0/1 values) and for the
/// path-count products derived from them, so all arithmetic on entry
/// values is overflow-checked.
class SparseIntMatrix {
 public:
  struct Entry {
    std::int64_t row = 0;
    std::int64_t col = 0;
    std::int64_t value = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// Constructs the 0x0 empty matrix.
  SparseIntMatrix() = default;

  /// Builds a matrix from an arbitrary entry list. Entries are sorted into
  /// canonical order; zero-valued entries are dropped. Throws
  /// std::invalid_argument on negative values, out-of-range indices, or
  /// duplicate (row, col) pairs.
  static SparseIntMatrix from_entries(std::int64_t rows, std::int64_t cols,
                                      std::vector<Entry> entries);

  static SparseIntMatrix zero(std::int64_t rows, std::int64_t cols);
  static SparseIntMatrix identity(std::int64_t n);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t nnz() const { return static_cast<std::int64_t>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Value at (row, col), zero when no entry is stored there.
  std::int64_t value_at(std::int64_t row, std::int64_t col) const;

  /// Offsets into entries() delimiting each row: row r occupies
  /// [offsets[r], offsets[r+1]). Size is rows()+1.
  std::vector<std::size_t> row_offsets() const;

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  struct Canonical {};
  SparseIntMatrix(Canonical, std::int64_t rows, std::int64_t cols,
                  std::vector<Entry> entries);

  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<Entry> entries_;

  friend SparseIntMatrix shift_matrix(std::int64_t n, std::int64_t shift);
  friend SparseIntMatrix ones_matrix(std::int64_t rows, std::int64_t cols);
  friend SparseIntMatrix kron(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix matmul(const SparseIntMatrix& a, const SparseIntMatrix& b);
};

/// n x n matrix with a single one per row at column (row + shift) mod n.
/// Rows are edge sources, columns are destinations; the result equals the
/// shift-th power of the unit cyclic shift. Requires n >= 1, shift >= 0.
SparseIntMatrix shift_matrix(std::int64_t n, std::int64_t shift);

/// rows x cols matrix of all ones. Requires rows, cols >= 1.
SparseIntMatrix ones_matrix(std::int64_t rows, std::int64_t cols);

/// Kronecker product. Entry ((ia*b.rows+ib), (ja*b.cols+jb)) equals
/// a(ia,ja) * b(ib,jb); zero products are not stored. Throws
/// std::overflow_error if the product dimensions leave the 64-bit range.
SparseIntMatrix kron(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// Exact integer matrix product. Throws std::invalid_argument on a
/// dimension mismatch and std::overflow_error if any accumulation leaves
/// the 64-bit range.
SparseIntMatrix matmul(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// The constant c when every position of the matrix (stored or implicit)
/// holds c, std::nullopt otherwise. A matrix with no stored entries is
/// constant zero.
std::optional<std::int64_t> is_constant(const SparseIntMatrix& a);

}  // namespace radixnet
