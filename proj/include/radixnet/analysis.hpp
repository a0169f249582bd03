#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "radixnet/builder.hpp"
#include "radixnet/errors.hpp"
#include "radixnet/mixed_radix.hpp"
#include "radixnet/rational.hpp"

namespace radixnet {

/// Default ceiling on the number of paths a brute-force enumeration may
/// visit in one call.
inline constexpr std::int64_t kDefaultPathGuard = 10'000'000;

struct SymmetryVerdict {
  bool symmetric = false;
  std::optional<std::int64_t> multiplicity;
};

struct DensityApproximations {
  double mu = 0.0;
  double d = 0.0;
  double mu_over_nprime = 0.0;
  double mu_pow_1_minus_d = 0.0;
};

struct FnntViolation {
  enum class Kind {
    LayerStructure,     // layer/submatrix counts or sizes inconsistent
    DimensionMismatch,  // submatrix shape disagrees with the layer sizes
    ZeroRow,            // node with no outgoing edges
    ZeroColumn,         // node with no incoming edges
    EntryNotOne,        // adjacency value other than one
  };
  Kind kind;
  std::int64_t layer = 0;  // 1-based submatrix index; 0 for structure issues
  std::int64_t index = -1; // offending row/column/entry position, -1 if n/a
  std::string message;
};

struct AnalysisReport {
  Rational density_exact;
  double density_mu_approx = 0.0;
  double density_d_approx = 0.0;
  double mu = 0.0;
  double d = 0.0;
  bool d_near_integer = true;
  bool symmetry_checked = false;
  bool symmetric = false;
  std::optional<std::int64_t> path_multiplicity;
  std::string symmetry_skip_reason;  // set when symmetry_checked is false
  std::optional<std::int64_t> closed_form_paths;  // absent on 64-bit overflow
  bool fnnt_valid = false;
  std::int64_t edge_count = 0;
  std::int64_t dense_edge_count = 0;
};

struct AnalyzeOptions {
  // Symmetry is verified by multiplying out the submatrix chain; the
  // verdict is skipped when layer_size[0] * edge_count exceeds this.
  std::int64_t symmetry_work_guard = 100'000'000;
};

/// Ratio of stored edges to the fully-connected edge count on the same
/// layers, as an exact rational in lowest terms.
Rational density_exact(const LayeredTopology& topology);

/// The same density computed symbolically from the spec parameters alone:
/// sum of radix-weighted width products over the dense width products,
/// divided by N'.
Rational density_closed_form(const RadixNetSpec& spec);

/// Mean flattened radix, d = log_mu N', and the two density
/// approximations mu/N' and mu^(1-d). When the radices are uniform the
/// approximations are computed through exact integer powers so they equal
/// the exact density bit-for-bit.
DensityApproximations density_approximations(const RadixNetSpec& spec);

/// Number of paths between any input/output pair of the generated
/// topology: N'^(M-2) times the final system product for M >= 2 systems
/// (1 for a single system), times the product of the interior widths.
/// Throws std::overflow_error when the count leaves the 64-bit range.
std::int64_t path_count_closed_form(const RadixNetSpec& spec);

/// Product of all adjacency submatrices; entry (u, v) counts the paths
/// from input u to output v.
SparseIntMatrix chained_submatrix_product(const LayeredTopology& topology);

/// A topology is symmetric when the chained product is a constant matrix
/// m * ones with m >= 1; m is then the common path count of every pair.
SymmetryVerdict verify_symmetry(const LayeredTopology& topology);

/// Counts source-to-sink paths by depth-first enumeration, independently
/// of the matrix product. Every complete path enumerated during the call
/// counts against the guard; a breach throws GuardExceededError.
std::int64_t brute_force_path_count(const LayeredTopology& topology,
                                    std::int64_t source, std::int64_t sink,
                                    std::int64_t path_guard = kDefaultPathGuard);

/// One depth-first sweep from a source, returning the path count to every
/// output node. Same enumeration and guard as brute_force_path_count.
std::vector<std::int64_t> brute_force_path_counts_from(
    const LayeredTopology& topology, std::int64_t source,
    std::int64_t path_guard = kDefaultPathGuard);

/// True when every input/output pair is joined by at least one path.
bool verify_path_connectedness(const LayeredTopology& topology);

/// Reports every violation of the feedforward-topology invariants:
/// inconsistent shapes, zero rows (dead ends), zero columns (unreachable
/// nodes), and entries other than one.
std::vector<FnntViolation> validate_fnnt(const LayeredTopology& topology);

/// Builds the topology for a valid spec and assembles the full report.
AnalysisReport analyze(const RadixNetSpec& spec,
                       const AnalyzeOptions& options = {});

}  // namespace radixnet
