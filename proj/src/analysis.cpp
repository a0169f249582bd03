#include "radixnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "radixnet/checked.hpp"

namespace radixnet {

namespace {

void require_layered(const LayeredTopology& topology, const char* op) {
  if (topology.submatrices.empty() ||
      topology.layer_count() !=
          static_cast<std::int64_t>(topology.submatrices.size()) + 1) {
    throw std::invalid_argument(std::string(op) +
                                ": topology must have n+1 layers and n "
                                "submatrices with n >= 1");
  }
}

}  // namespace

Rational density_exact(const LayeredTopology& topology) {
  require_layered(topology, "density_exact");
  std::int64_t edges = 0;
  std::int64_t dense = 0;
  for (std::size_t i = 0; i < topology.submatrices.size(); ++i) {
    edges = checked_add(edges, topology.submatrices[i].nnz(), "density_exact");
    dense = checked_add(dense,
                        checked_mul(topology.layer_sizes[i],
                                    topology.layer_sizes[i + 1],
                                    "density_exact"),
                        "density_exact");
  }
  return Rational(edges, dense);
}

Rational density_closed_form(const RadixNetSpec& spec) {
  const SpecValidation validation = validate_spec(spec);
  if (!validation.ok()) {
    throw std::invalid_argument("density_closed_form: invalid spec");
  }
  const std::vector<std::int64_t> radices = spec.flattened_radices();
  std::int64_t weighted = 0;  // sum of N_i * D_{i-1} * D_i
  std::int64_t blocks = 0;    // sum of D_{i-1} * D_i
  for (std::size_t i = 0; i < radices.size(); ++i) {
    const std::int64_t block = checked_mul(spec.widths[i], spec.widths[i + 1],
                                           "density_closed_form");
    blocks = checked_add(blocks, block, "density_closed_form");
    weighted = checked_add(weighted,
                           checked_mul(radices[i], block, "density_closed_form"),
                           "density_closed_form");
  }
  return Rational(weighted,
                  checked_mul(spec.nprime(), blocks, "density_closed_form"));
}

DensityApproximations density_approximations(const RadixNetSpec& spec) {
  const SpecValidation validation = validate_spec(spec);
  if (!validation.ok()) {
    throw std::invalid_argument("density_approximations: invalid spec");
  }
  const std::vector<std::int64_t> radices = spec.flattened_radices();
  const std::int64_t nprime = spec.nprime();
  const auto count = static_cast<std::int64_t>(radices.size());
  std::int64_t sum = 0;
  for (std::int64_t r : radices) {
    sum += r;
  }

  DensityApproximations out;
  out.mu = static_cast<double>(sum) / static_cast<double>(count);
  out.mu_over_nprime = out.mu / static_cast<double>(nprime);

  // With an integer mean and N' an exact power of it, go through integer
  // powers so the zero-variance case reproduces the exact density.
  if (sum % count == 0) {
    const std::int64_t mu_int = sum / count;
    std::int64_t power = 1;
    for (std::int64_t k = 0; power <= nprime; ++k) {
      if (power == nprime) {
        out.d = static_cast<double>(k);
        out.mu_pow_1_minus_d =
            1.0 / static_cast<double>(checked_pow(mu_int, k - 1,
                                                  "density_approximations"));
        return out;
      }
      power = checked_mul(power, mu_int, "density_approximations");
    }
  }
  out.d = std::log(static_cast<double>(nprime)) / std::log(out.mu);
  out.mu_pow_1_minus_d = std::pow(out.mu, 1.0 - out.d);
  return out;
}

std::int64_t path_count_closed_form(const RadixNetSpec& spec) {
  const SpecValidation validation = validate_spec(spec);
  if (!validation.ok()) {
    throw std::invalid_argument("path_count_closed_form: invalid spec");
  }
  const char* op = "path_count_closed_form";
  const auto systems = static_cast<std::int64_t>(spec.systems.size());
  std::int64_t count = 1;
  if (systems >= 2) {
    count = checked_mul(checked_pow(spec.nprime(), systems - 2, op),
                        spec.systems.back().product(), op);
  }
  for (std::size_t i = 1; i + 1 < spec.widths.size(); ++i) {
    count = checked_mul(count, spec.widths[i], op);
  }
  return count;
}

SparseIntMatrix chained_submatrix_product(const LayeredTopology& topology) {
  require_layered(topology, "chained_submatrix_product");
  SparseIntMatrix product = topology.submatrices.front();
  for (std::size_t i = 1; i < topology.submatrices.size(); ++i) {
    product = matmul(product, topology.submatrices[i]);
  }
  return product;
}

SymmetryVerdict verify_symmetry(const LayeredTopology& topology) {
  const std::optional<std::int64_t> constant =
      is_constant(chained_submatrix_product(topology));
  if (constant.has_value() && *constant >= 1) {
    return {true, constant};
  }
  return {false, std::nullopt};
}

namespace {

// Flattened adjacency lists per layer transition. An entry value v > 1 is
// expanded to v parallel edges so enumeration matches the matrix product
// even on degenerate inputs.
struct AdjacencyChain {
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::vector<std::int64_t>> targets;

  explicit AdjacencyChain(const LayeredTopology& topology) {
    offsets.reserve(topology.submatrices.size());
    targets.reserve(topology.submatrices.size());
    for (const SparseIntMatrix& w : topology.submatrices) {
      std::vector<std::size_t> offs(static_cast<std::size_t>(w.rows()) + 1, 0);
      for (const auto& e : w.entries()) {
        offs[static_cast<std::size_t>(e.row) + 1] +=
            static_cast<std::size_t>(e.value);
      }
      for (std::size_t r = 1; r < offs.size(); ++r) {
        offs[r] += offs[r - 1];
      }
      std::vector<std::int64_t> tgts(offs.back());
      std::vector<std::size_t> cursor(offs.begin(), offs.end() - 1);
      for (const auto& e : w.entries()) {
        for (std::int64_t k = 0; k < e.value; ++k) {
          tgts[cursor[static_cast<std::size_t>(e.row)]++] = e.col;
        }
      }
      offsets.push_back(std::move(offs));
      targets.push_back(std::move(tgts));
    }
  }
};

struct PathWalker {
  const AdjacencyChain& chain;
  std::vector<std::int64_t>& counts;
  std::int64_t guard;
  std::int64_t total = 0;

  void walk(std::size_t layer, std::int64_t node) {
    const auto& offs = chain.offsets[layer];
    const auto& tgts = chain.targets[layer];
    const std::size_t begin = offs[static_cast<std::size_t>(node)];
    const std::size_t end = offs[static_cast<std::size_t>(node) + 1];
    if (layer + 1 == chain.offsets.size()) {
      total += static_cast<std::int64_t>(end - begin);
      if (total > guard) {
        throw GuardExceededError(
            "brute_force_path_count: enumeration exceeds guard of " +
            std::to_string(guard) + " paths");
      }
      for (std::size_t p = begin; p < end; ++p) {
        ++counts[static_cast<std::size_t>(tgts[p])];
      }
      return;
    }
    for (std::size_t p = begin; p < end; ++p) {
      walk(layer + 1, tgts[p]);
    }
  }
};

}  // namespace

std::vector<std::int64_t> brute_force_path_counts_from(
    const LayeredTopology& topology, std::int64_t source,
    std::int64_t path_guard) {
  require_layered(topology, "brute_force_path_counts_from");
  if (source < 0 || source >= topology.layer_sizes.front()) {
    throw std::out_of_range("brute_force_path_counts_from: source " +
                            std::to_string(source) + " not in input layer");
  }
  std::vector<std::int64_t> counts(
      static_cast<std::size_t>(topology.layer_sizes.back()), 0);
  const AdjacencyChain chain(topology);
  PathWalker walker{chain, counts, path_guard};
  walker.walk(0, source);
  return counts;
}

std::int64_t brute_force_path_count(const LayeredTopology& topology,
                                    std::int64_t source, std::int64_t sink,
                                    std::int64_t path_guard) {
  if (sink < 0 || sink >= topology.layer_sizes.back()) {
    throw std::out_of_range("brute_force_path_count: sink " +
                            std::to_string(sink) + " not in output layer");
  }
  const std::vector<std::int64_t> counts =
      brute_force_path_counts_from(topology, source, path_guard);
  return counts[static_cast<std::size_t>(sink)];
}

bool verify_path_connectedness(const LayeredTopology& topology) {
  const SparseIntMatrix product = chained_submatrix_product(topology);
  return product.nnz() == checked_mul(product.rows(), product.cols(),
                                      "verify_path_connectedness");
}

std::vector<FnntViolation> validate_fnnt(const LayeredTopology& topology) {
  std::vector<FnntViolation> violations;
  if (topology.layer_count() !=
      static_cast<std::int64_t>(topology.submatrices.size()) + 1) {
    violations.push_back(
        {FnntViolation::Kind::LayerStructure, 0, -1,
         std::to_string(topology.layer_count()) + " layers but " +
             std::to_string(topology.submatrices.size()) + " submatrices"});
    return violations;
  }
  for (std::size_t i = 0; i < topology.layer_sizes.size(); ++i) {
    if (topology.layer_sizes[i] < 1) {
      violations.push_back({FnntViolation::Kind::LayerStructure, 0,
                            static_cast<std::int64_t>(i),
                            "layer " + std::to_string(i) + " has size " +
                                std::to_string(topology.layer_sizes[i])});
    }
  }
  if (!violations.empty()) {
    return violations;
  }

  for (std::size_t i = 0; i < topology.submatrices.size(); ++i) {
    const SparseIntMatrix& w = topology.submatrices[i];
    const auto layer = static_cast<std::int64_t>(i) + 1;
    if (w.rows() != topology.layer_sizes[i] ||
        w.cols() != topology.layer_sizes[i + 1]) {
      violations.push_back(
          {FnntViolation::Kind::DimensionMismatch, layer, -1,
           "submatrix " + std::to_string(layer) + " is " +
               std::to_string(w.rows()) + "x" + std::to_string(w.cols()) +
               ", expected " + std::to_string(topology.layer_sizes[i]) + "x" +
               std::to_string(topology.layer_sizes[i + 1])});
      continue;
    }
    std::vector<bool> row_used(static_cast<std::size_t>(w.rows()), false);
    std::vector<bool> col_used(static_cast<std::size_t>(w.cols()), false);
    for (const auto& e : w.entries()) {
      row_used[static_cast<std::size_t>(e.row)] = true;
      col_used[static_cast<std::size_t>(e.col)] = true;
      if (e.value != 1) {
        violations.push_back(
            {FnntViolation::Kind::EntryNotOne, layer, e.row,
             "submatrix " + std::to_string(layer) + " entry (" +
                 std::to_string(e.row) + ", " + std::to_string(e.col) +
                 ") has value " + std::to_string(e.value)});
      }
    }
    for (std::int64_t r = 0; r < w.rows(); ++r) {
      if (!row_used[static_cast<std::size_t>(r)]) {
        violations.push_back({FnntViolation::Kind::ZeroRow, layer, r,
                              "node " + std::to_string(r) + " in layer " +
                                  std::to_string(i) + " has no outgoing edges"});
      }
    }
    for (std::int64_t c = 0; c < w.cols(); ++c) {
      if (!col_used[static_cast<std::size_t>(c)]) {
        violations.push_back({FnntViolation::Kind::ZeroColumn, layer, c,
                              "node " + std::to_string(c) + " in layer " +
                                  std::to_string(i + 1) +
                                  " has no incoming edges"});
      }
    }
  }
  return violations;
}

AnalysisReport analyze(const RadixNetSpec& spec, const AnalyzeOptions& options) {
  const SpecValidation validation = validate_spec(spec);
  if (!validation.ok()) {
    throw std::invalid_argument("analyze: invalid spec");
  }
  const LayeredTopology topology = build_radixnet(spec);

  AnalysisReport report;
  report.density_exact = density_exact(topology);
  const DensityApproximations approx = density_approximations(spec);
  report.mu = approx.mu;
  report.d = approx.d;
  report.density_mu_approx = approx.mu_over_nprime;
  report.density_d_approx = approx.mu_pow_1_minus_d;
  report.d_near_integer = std::abs(approx.d - std::round(approx.d)) <= 0.05;
  report.fnnt_valid = validate_fnnt(topology).empty();
  report.edge_count = topology.edge_count();
  std::int64_t dense = 0;
  for (std::size_t i = 0; i + 1 < topology.layer_sizes.size(); ++i) {
    dense = checked_add(dense,
                        checked_mul(topology.layer_sizes[i],
                                    topology.layer_sizes[i + 1], "analyze"),
                        "analyze");
  }
  report.dense_edge_count = dense;

  try {
    report.closed_form_paths = path_count_closed_form(spec);
  } catch (const std::overflow_error&) {
    report.closed_form_paths = std::nullopt;
  }

  const std::int64_t work =
      checked_mul(topology.layer_sizes.front(), report.edge_count, "analyze");
  if (work > options.symmetry_work_guard) {
    report.symmetry_checked = false;
    report.symmetry_skip_reason = "guard";
    return report;
  }
  try {
    const SymmetryVerdict verdict = verify_symmetry(topology);
    report.symmetry_checked = true;
    report.symmetric = verdict.symmetric;
    report.path_multiplicity = verdict.multiplicity;
  } catch (const std::overflow_error&) {
    report.symmetry_checked = false;
    report.symmetry_skip_reason = "overflow";
  }
  return report;
}

}  // namespace radixnet
