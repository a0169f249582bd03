#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "radixnet/builder.hpp"
#include "radixnet/errors.hpp"
#include "radixnet/mixed_radix.hpp"

namespace radixnet::io {

/// Default ceiling on rows * cols for a dense mask file.
inline constexpr std::int64_t kDefaultMaskCellGuard = 1'000'000;

/// Malformed input: bad JSON, bad edge-list line, bad index. The message
/// carries the position (line number or parser offset).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structurally well-formed spec document that fails the generator
/// constraints; the individual violations are attached.
class SpecConstraintError : public std::runtime_error {
 public:
  SpecConstraintError(const std::string& message, SpecValidation validation)
      : std::runtime_error(message), validation_(std::move(validation)) {}

  const SpecValidation& validation() const { return validation_; }

 private:
  SpecValidation validation_;
};

/// Reads a spec document: a JSON object with "systems" (list of lists of
/// integers), "widths" (list of integers), and an optional "name" string.
/// Throws ParseError on malformed input and SpecConstraintError when the
/// parsed spec fails validate_spec.
RadixNetSpec read_spec(std::istream& in);
RadixNetSpec read_spec_file(const std::filesystem::path& path);

/// Writes the spec document form; output is byte-deterministic.
void write_spec(const RadixNetSpec& spec, std::ostream& out);
void write_spec_file(const RadixNetSpec& spec,
                     const std::filesystem::path& path);

/// Edge-list lines "layer<TAB>src<TAB>dst", one edge per line, sorted by
/// (layer, src, dst). Layers are numbered from 1; node indices are 0-based
/// within their layer. No header, every line newline-terminated.
void write_edge_list(const LayeredTopology& topology, std::ostream& out);
void write_edge_list_file(const LayeredTopology& topology,
                          const std::filesystem::path& path);

/// Reads an edge list back into a topology over the given layer sizes.
/// Throws ParseError on malformed lines (with the line number),
/// out-of-range indices, or duplicate edges.
LayeredTopology read_edge_list(std::istream& in,
                               std::span<const std::int64_t> layer_sizes);
LayeredTopology read_edge_list_file(const std::filesystem::path& path,
                                    std::span<const std::int64_t> layer_sizes);

/// Writes one coordinate-format sparse matrix file per layer, named
/// layer_<i>.mtx (i from 1), with 1-based indices in canonical order.
void write_matrix_market(const LayeredTopology& topology,
                         const std::filesystem::path& directory);

/// Writes one dense 0/1 text mask per layer, named layer_<i>.mask, rows of
/// space-separated digits. Throws GuardExceededError when any layer's
/// dense cell count exceeds the guard.
void write_mask_grid(const LayeredTopology& topology,
                     const std::filesystem::path& directory,
                     std::int64_t cell_guard = kDefaultMaskCellGuard);

}  // namespace radixnet::io
