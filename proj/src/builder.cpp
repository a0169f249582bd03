#include "radixnet/builder.hpp"

#include <stdexcept>
#include <string>

#include "radixnet/checked.hpp"

namespace radixnet {

std::int64_t RadixNetSpec::nprime() const {
  if (systems.empty()) {
    throw std::invalid_argument("RadixNetSpec: no systems");
  }
  return systems.front().product();
}

std::int64_t RadixNetSpec::radix_count() const {
  std::int64_t total = 0;
  for (const MixedRadixSystem& s : systems) {
    total += s.size();
  }
  return total;
}

std::vector<std::int64_t> RadixNetSpec::flattened_radices() const {
  std::vector<std::int64_t> flat;
  for (const MixedRadixSystem& s : systems) {
    flat.insert(flat.end(), s.radices().begin(), s.radices().end());
  }
  return flat;
}

SpecValidation validate_spec(const RadixNetSpec& spec) {
  SpecValidation result;
  if (spec.systems.empty()) {
    result.violations.push_back("at least one mixed-radix system is required");
    return result;
  }
  const std::int64_t nprime = spec.systems.front().product();
  for (std::size_t i = 0; i + 1 < spec.systems.size(); ++i) {
    if (spec.systems[i].product() != nprime) {
      result.violations.push_back(
          "system " + std::to_string(i + 1) + " has product " +
          std::to_string(spec.systems[i].product()) +
          ", but every system before the last must have product " +
          std::to_string(nprime));
    }
  }
  const std::int64_t last = spec.systems.back().product();
  if (spec.systems.size() > 1 && nprime % last != 0) {
    result.violations.push_back(
        "final system product " + std::to_string(last) + " does not divide " +
        std::to_string(nprime));
  }

  const std::int64_t expected_widths = spec.radix_count() + 1;
  if (static_cast<std::int64_t>(spec.widths.size()) != expected_widths) {
    result.violations.push_back(
        "width list has " + std::to_string(spec.widths.size()) +
        " entries, expected " + std::to_string(expected_widths));
  }
  for (std::size_t i = 0; i < spec.widths.size(); ++i) {
    if (spec.widths[i] < 1) {
      result.violations.push_back("width " + std::to_string(i) + " is " +
                                  std::to_string(spec.widths[i]) +
                                  ", widths must be positive");
    } else if (spec.widths[i] >= nprime) {
      // Soft constraint: widths are meant to be small relative to N'.
      result.warnings.push_back("width " + std::to_string(i) + " (" +
                                std::to_string(spec.widths[i]) +
                                ") is not small relative to N' = " +
                                std::to_string(nprime));
    }
  }
  return result;
}

namespace {

void require_valid(const RadixNetSpec& spec, const char* op) {
  const SpecValidation validation = validate_spec(spec);
  if (!validation.ok()) {
    std::string message = std::string(op) + ": invalid spec";
    for (const std::string& v : validation.violations) {
      message += "; " + v;
    }
    throw std::invalid_argument(message);
  }
}

}  // namespace

std::vector<std::int64_t> layer_sizes(const RadixNetSpec& spec) {
  require_valid(spec, "layer_sizes");
  const std::int64_t nprime = spec.nprime();
  std::vector<std::int64_t> sizes;
  sizes.reserve(spec.widths.size());
  for (std::int64_t width : spec.widths) {
    sizes.push_back(checked_mul(width, nprime, "layer_sizes"));
  }
  return sizes;
}

LayeredTopology build_radixnet(const RadixNetSpec& spec) {
  require_valid(spec, "build_radixnet");
  const LayeredTopology emr = build_emr_topology(spec.systems);

  LayeredTopology topology;
  topology.layer_sizes = layer_sizes(spec);
  topology.submatrices.reserve(emr.submatrices.size());
  for (std::size_t i = 0; i < emr.submatrices.size(); ++i) {
    topology.submatrices.push_back(
        kron(ones_matrix(spec.widths[i], spec.widths[i + 1]),
             emr.submatrices[i]));
  }
  return topology;
}

}  // namespace radixnet
