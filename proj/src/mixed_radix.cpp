#include "radixnet/mixed_radix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "radixnet/checked.hpp"

namespace radixnet {

MixedRadixSystem::MixedRadixSystem(std::vector<std::int64_t> radices)
    : radices_(std::move(radices)) {
  if (radices_.empty()) {
    throw std::invalid_argument("MixedRadixSystem: at least one radix required");
  }
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    if (radices_[i] < 2) {
      throw std::invalid_argument("MixedRadixSystem: radix " +
                                  std::to_string(i + 1) + " is " +
                                  std::to_string(radices_[i]) +
                                  ", every radix must be at least 2");
    }
  }
  for (std::int64_t r : radices_) {
    product_ = checked_mul(product_, r, "MixedRadixSystem product");
  }
}

std::int64_t MixedRadixSystem::place_value(std::int64_t layer) const {
  if (layer < 1 || layer > size()) {
    throw std::out_of_range("place_value: layer " + std::to_string(layer) +
                            " outside 1.." + std::to_string(size()));
  }
  std::int64_t v = 1;
  for (std::int64_t k = 0; k + 1 < layer; ++k) {
    v *= radices_[static_cast<std::size_t>(k)];
  }
  return v;
}

std::int64_t MixedRadixSystem::decode_digits(
    std::span<const std::int64_t> digits) const {
  if (static_cast<std::int64_t>(digits.size()) != size()) {
    throw std::invalid_argument(
        "decode_digits: expected " + std::to_string(size()) + " digits, got " +
        std::to_string(digits.size()));
  }
  std::int64_t value = 0;
  std::int64_t place = 1;
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= radices_[i]) {
      throw std::invalid_argument(
          "decode_digits: digit " + std::to_string(i + 1) + " is " +
          std::to_string(digits[i]) + ", outside 0.." +
          std::to_string(radices_[i] - 1));
    }
    value += digits[i] * place;
    place *= radices_[i];
  }
  return value;
}

std::vector<std::int64_t> MixedRadixSystem::encode_digits(
    std::int64_t value) const {
  if (value < 0 || value >= product_) {
    throw std::out_of_range("encode_digits: value " + std::to_string(value) +
                            " outside 0.." + std::to_string(product_ - 1));
  }
  std::vector<std::int64_t> digits(radices_.size(), 0);
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    digits[i] = value % radices_[i];
    value /= radices_[i];
  }
  return digits;
}

std::int64_t LayeredTopology::edge_count() const {
  std::int64_t total = 0;
  for (const SparseIntMatrix& w : submatrices) {
    total = checked_add(total, w.nnz(), "edge_count");
  }
  return total;
}

SparseIntMatrix layer_submatrix(const MixedRadixSystem& system,
                                std::int64_t layer) {
  return layer_submatrix(system, layer, system.product());
}

SparseIntMatrix layer_submatrix(const MixedRadixSystem& system,
                                std::int64_t layer, std::int64_t nodes) {
  if (layer < 1 || layer > system.size()) {
    throw std::out_of_range("layer_submatrix: layer " + std::to_string(layer) +
                            " outside 1.." + std::to_string(system.size()));
  }
  if (nodes < 1) {
    throw std::invalid_argument("layer_submatrix: node count must be positive");
  }
  const std::int64_t radix = system.radices()[static_cast<std::size_t>(layer - 1)];
  const std::int64_t place = system.place_value(layer);
  std::vector<SparseIntMatrix::Entry> entries;
  entries.reserve(static_cast<std::size_t>(
      checked_mul(nodes, radix, "layer_submatrix")));
  std::vector<std::int64_t> cols(static_cast<std::size_t>(radix), 0);
  for (std::int64_t j = 0; j < nodes; ++j) {
    for (std::int64_t n = 0; n < radix; ++n) {
      cols[static_cast<std::size_t>(n)] = (j + n * place) % nodes;
    }
    std::sort(cols.begin(), cols.end());
    for (std::int64_t c : cols) {
      entries.push_back({j, c, 1});
    }
  }
  return SparseIntMatrix::from_entries(nodes, nodes, std::move(entries));
}

LayeredTopology build_mixed_radix_topology(const MixedRadixSystem& system) {
  return build_emr_topology({system});
}

LayeredTopology build_emr_topology(
    const std::vector<MixedRadixSystem>& systems) {
  if (systems.empty()) {
    throw std::invalid_argument("build_emr_topology: no systems given");
  }
  const std::int64_t nprime = systems.front().product();
  for (std::size_t i = 0; i + 1 < systems.size(); ++i) {
    if (systems[i].product() != nprime) {
      throw std::invalid_argument(
          "build_emr_topology: system " + std::to_string(i + 1) +
          " has product " + std::to_string(systems[i].product()) +
          ", expected " + std::to_string(nprime));
    }
  }
  if (nprime % systems.back().product() != 0) {
    throw std::invalid_argument(
        "build_emr_topology: final system product " +
        std::to_string(systems.back().product()) + " does not divide " +
        std::to_string(nprime));
  }

  LayeredTopology topology;
  topology.layer_sizes.push_back(nprime);
  for (const MixedRadixSystem& system : systems) {
    for (std::int64_t i = 1; i <= system.size(); ++i) {
      topology.submatrices.push_back(layer_submatrix(system, i, nprime));
      topology.layer_sizes.push_back(nprime);
    }
  }
  return topology;
}

}  // namespace radixnet
