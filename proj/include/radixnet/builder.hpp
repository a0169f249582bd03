#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radixnet/mixed_radix.hpp"

namespace radixnet {

/// Complete generator input: an ordered list of mixed-radix systems and a
/// width list with one entry per topology layer (total radix count + 1).
///
/// A spec is well formed when all systems but the last share one product
/// N', the last system's product divides N', every width is positive, and
/// the width list length matches. validate_spec reports violations of
/// these constraints as data; build_radixnet requires a clean spec.
struct RadixNetSpec {
  std::vector<MixedRadixSystem> systems;
  std::vector<std::int64_t> widths;

  /// Product shared by the leading systems (the first system's product).
  std::int64_t nprime() const;
  /// Total number of radices across all systems.
  std::int64_t radix_count() const;
  /// All radices in system order, flattened.
  std::vector<std::int64_t> flattened_radices() const;

  friend bool operator==(const RadixNetSpec&, const RadixNetSpec&) = default;
};

struct SpecValidation {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

/// Checks the generator constraints. Violations and soft warnings (a width
/// not small relative to N') are returned as data, never thrown.
SpecValidation validate_spec(const RadixNetSpec& spec);

/// Layer sizes of the generated topology: width times N' per layer.
std::vector<std::int64_t> layer_sizes(const RadixNetSpec& spec);

/// Builds the full topology: the extended mixed-radix submatrix of each
/// layer, Kronecker-multiplied on the left by the all-ones block of the
/// adjacent widths. Throws std::invalid_argument on a spec that fails
/// validate_spec.
LayeredTopology build_radixnet(const RadixNetSpec& spec);

}  // namespace radixnet
