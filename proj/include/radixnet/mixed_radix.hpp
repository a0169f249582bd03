#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "radixnet/sparse_matrix.hpp"

namespace radixnet {

/// Ordered list of radices (N_1, ..., N_L), each at least 2. Defines the
/// numeral system that represents every integer in {0, ..., N'-1}, with
/// N' the product of the radices, as a unique digit tuple. The product is
/// overflow-checked at construction.
class MixedRadixSystem {
 public:
  explicit MixedRadixSystem(std::vector<std::int64_t> radices);

  std::int64_t size() const {
    return static_cast<std::int64_t>(radices_.size());
  }
  const std::vector<std::int64_t>& radices() const { return radices_; }
  std::int64_t product() const { return product_; }

  /// Place value of layer i (1-based): the product of radices 1..i-1.
  std::int64_t place_value(std::int64_t layer) const;

  /// Integer value of a digit tuple (n_1, ..., n_L): sum of n_i times the
  /// i-th place value. Throws on a length mismatch or digit out of range.
  std::int64_t decode_digits(std::span<const std::int64_t> digits) const;

  /// Digit tuple of a value in {0, ..., N'-1}; inverse of decode_digits.
  std::vector<std::int64_t> encode_digits(std::int64_t value) const;

  friend bool operator==(const MixedRadixSystem&,
                         const MixedRadixSystem&) = default;

 private:
  std::vector<std::int64_t> radices_;
  std::int64_t product_ = 1;
};

/// Layered feedforward topology: n+1 layer sizes and the n adjacency
/// submatrices between consecutive layers. Submatrix i (0-based) has
/// layer_sizes[i] rows (edge sources) and layer_sizes[i+1] columns.
///
/// This is a plain carrier: a value may violate the feedforward invariants
/// (all entries one, no zero row or column); validate_fnnt in the analysis
/// module reports such violations.
struct LayeredTopology {
  std::vector<std::int64_t> layer_sizes;
  std::vector<SparseIntMatrix> submatrices;

  std::int64_t layer_count() const {
    return static_cast<std::int64_t>(layer_sizes.size());
  }
  std::int64_t edge_count() const;

  friend bool operator==(const LayeredTopology&,
                         const LayeredTopology&) = default;
};

/// Adjacency submatrix of layer i (1-based, 1 <= i <= L) of the topology
/// induced by a system: N' x N' with row j holding ones at columns
/// (j + n * place_value(i)) mod N' for n in {0, ..., N_i - 1}.
SparseIntMatrix layer_submatrix(const MixedRadixSystem& system,
                                std::int64_t layer);

/// Same construction on an explicit node count; used when a system whose
/// product divides N' contributes layers of width N'.
SparseIntMatrix layer_submatrix(const MixedRadixSystem& system,
                                std::int64_t layer, std::int64_t nodes);

/// The mixed-radix topology induced by one system: L+1 layers of N' nodes.
LayeredTopology build_mixed_radix_topology(const MixedRadixSystem& system);

/// Extended mixed-radix topology: the concatenation of the systems'
/// topologies with each output layer identified with the next input layer.
/// The systems must satisfy the generator constraints (equal products for
/// all but the last system, whose product divides N'); all layers have
/// width N', the product of the first system.
LayeredTopology build_emr_topology(const std::vector<MixedRadixSystem>& systems);

}  // namespace radixnet
