#include "radixnet/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "radixnet/checked.hpp"

namespace radixnet::io {

namespace {

using nlohmann::json;

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  return out;
}

void finish_output(std::ostream& out, const std::string& what) {
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed: " + what);
  }
}

}  // namespace

RadixNetSpec read_spec(std::istream& in) {
  json document;
  try {
    document = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("spec document: ") + e.what());
  }
  if (!document.is_object()) {
    throw ParseError("spec document: top level must be an object");
  }
  if (!document.contains("systems") || !document["systems"].is_array()) {
    throw ParseError("spec document: \"systems\" must be a list of lists");
  }
  if (!document.contains("widths") || !document["widths"].is_array()) {
    throw ParseError("spec document: \"widths\" must be a list of integers");
  }
  if (document.contains("name") && !document["name"].is_string()) {
    throw ParseError("spec document: \"name\" must be a string");
  }

  SpecValidation violations;
  RadixNetSpec spec;
  for (std::size_t i = 0; i < document["systems"].size(); ++i) {
    const json& entry = document["systems"][i];
    if (!entry.is_array() || entry.empty()) {
      throw ParseError("spec document: system " + std::to_string(i + 1) +
                       " must be a non-empty list of integers");
    }
    std::vector<std::int64_t> radices;
    for (const json& r : entry) {
      if (!r.is_number_integer()) {
        throw ParseError("spec document: system " + std::to_string(i + 1) +
                         " contains a non-integer radix");
      }
      radices.push_back(r.get<std::int64_t>());
    }
    try {
      spec.systems.emplace_back(std::move(radices));
    } catch (const std::exception& e) {
      violations.violations.push_back("system " + std::to_string(i + 1) +
                                      ": " + e.what());
    }
  }
  for (const json& w : document["widths"]) {
    if (!w.is_number_integer()) {
      throw ParseError("spec document: \"widths\" contains a non-integer");
    }
    spec.widths.push_back(w.get<std::int64_t>());
  }

  if (violations.violations.empty()) {
    violations = validate_spec(spec);
  }
  if (!violations.ok()) {
    std::string message = "spec fails validation";
    for (const std::string& v : violations.violations) {
      message += "; " + v;
    }
    throw SpecConstraintError(message, std::move(violations));
  }
  return spec;
}

RadixNetSpec read_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string() + " for reading");
  }
  return read_spec(in);
}

void write_spec(const RadixNetSpec& spec, std::ostream& out) {
  json systems = json::array();
  for (const MixedRadixSystem& system : spec.systems) {
    systems.push_back(system.radices());
  }
  const json document = {{"systems", systems}, {"widths", spec.widths}};
  out << document.dump() << '\n';
  finish_output(out, "spec document");
}

void write_spec_file(const RadixNetSpec& spec,
                     const std::filesystem::path& path) {
  auto out = open_output(path);
  write_spec(spec, out);
}

void write_edge_list(const LayeredTopology& topology, std::ostream& out) {
  for (std::size_t i = 0; i < topology.submatrices.size(); ++i) {
    const std::string layer = std::to_string(i + 1);
    for (const auto& e : topology.submatrices[i].entries()) {
      out << layer << '\t' << e.row << '\t' << e.col << '\n';
    }
  }
  finish_output(out, "edge list");
}

void write_edge_list_file(const LayeredTopology& topology,
                          const std::filesystem::path& path) {
  auto out = open_output(path);
  write_edge_list(topology, out);
}

namespace {

std::int64_t parse_field(const std::string& line, std::size_t& pos,
                         std::size_t line_number, bool last) {
  const std::size_t end = last ? line.size() : line.find('\t', pos);
  if (end == std::string::npos) {
    throw ParseError("edge list line " + std::to_string(line_number) +
                     ": expected three tab-separated fields");
  }
  std::int64_t value = 0;
  const char* first = line.data() + pos;
  const char* stop = line.data() + end;
  const auto [ptr, ec] = std::from_chars(first, stop, value);
  if (ec != std::errc() || ptr != stop || first == stop) {
    throw ParseError("edge list line " + std::to_string(line_number) +
                     ": malformed integer field");
  }
  pos = end + 1;
  return value;
}

}  // namespace

LayeredTopology read_edge_list(std::istream& in,
                               std::span<const std::int64_t> layer_sizes) {
  if (layer_sizes.size() < 2) {
    throw std::invalid_argument("read_edge_list: need at least two layers");
  }
  const auto layers = static_cast<std::int64_t>(layer_sizes.size()) - 1;
  std::vector<std::vector<SparseIntMatrix::Entry>> per_layer(
      static_cast<std::size_t>(layers));

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      throw ParseError("edge list line " + std::to_string(line_number) +
                       ": carriage return not allowed");
    }
    std::size_t pos = 0;
    const std::int64_t layer = parse_field(line, pos, line_number, false);
    const std::int64_t src = parse_field(line, pos, line_number, false);
    const std::int64_t dst = parse_field(line, pos, line_number, true);
    if (layer < 1 || layer > layers) {
      throw ParseError("edge list line " + std::to_string(line_number) +
                       ": layer " + std::to_string(layer) + " outside 1.." +
                       std::to_string(layers));
    }
    const auto i = static_cast<std::size_t>(layer - 1);
    if (src < 0 || src >= layer_sizes[i]) {
      throw ParseError("edge list line " + std::to_string(line_number) +
                       ": source " + std::to_string(src) +
                       " outside layer of size " +
                       std::to_string(layer_sizes[i]));
    }
    if (dst < 0 || dst >= layer_sizes[i + 1]) {
      throw ParseError("edge list line " + std::to_string(line_number) +
                       ": destination " + std::to_string(dst) +
                       " outside layer of size " +
                       std::to_string(layer_sizes[i + 1]));
    }
    per_layer[i].push_back({src, dst, 1});
  }

  LayeredTopology topology;
  topology.layer_sizes.assign(layer_sizes.begin(), layer_sizes.end());
  for (std::size_t i = 0; i < per_layer.size(); ++i) {
    auto entries = per_layer[i];
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) {
                return a.row < b.row || (a.row == b.row && a.col < b.col);
              });
    const auto dup = std::adjacent_find(entries.begin(), entries.end(),
                                        [](const auto& a, const auto& b) {
                                          return a.row == b.row &&
                                                 a.col == b.col;
                                        });
    if (dup != entries.end()) {
      throw ParseError("edge list: duplicate edge in layer " +
                       std::to_string(i + 1) + ": (" +
                       std::to_string(dup->row) + ", " +
                       std::to_string(dup->col) + ")");
    }
    topology.submatrices.push_back(SparseIntMatrix::from_entries(
        layer_sizes[i], layer_sizes[i + 1], std::move(entries)));
  }
  return topology;
}

LayeredTopology read_edge_list_file(const std::filesystem::path& path,
                                    std::span<const std::int64_t> layer_sizes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string() + " for reading");
  }
  return read_edge_list(in, layer_sizes);
}

void write_matrix_market(const LayeredTopology& topology,
                         const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  for (std::size_t i = 0; i < topology.submatrices.size(); ++i) {
    const SparseIntMatrix& w = topology.submatrices[i];
    auto out = open_output(directory /
                           ("layer_" + std::to_string(i + 1) + ".mtx"));
    out << "%%MatrixMarket matrix coordinate integer general\n";
    out << w.rows() << ' ' << w.cols() << ' ' << w.nnz() << '\n';
    for (const auto& e : w.entries()) {
      out << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value << '\n';
    }
    finish_output(out, "layer_" + std::to_string(i + 1) + ".mtx");
  }
}

void write_mask_grid(const LayeredTopology& topology,
                     const std::filesystem::path& directory,
                     std::int64_t cell_guard) {
  for (const SparseIntMatrix& w : topology.submatrices) {
    if (checked_mul(w.rows(), w.cols(), "write_mask_grid") > cell_guard) {
      throw GuardExceededError(
          "write_mask_grid: dense layer of " + std::to_string(w.rows()) + "x" +
          std::to_string(w.cols()) + " cells exceeds guard of " +
          std::to_string(cell_guard));
    }
  }
  std::filesystem::create_directories(directory);
  for (std::size_t i = 0; i < topology.submatrices.size(); ++i) {
    const SparseIntMatrix& w = topology.submatrices[i];
    auto out = open_output(directory /
                           ("layer_" + std::to_string(i + 1) + ".mask"));
    auto entry = w.entries().begin();
    const auto end = w.entries().end();
    std::string row_text;
    for (std::int64_t r = 0; r < w.rows(); ++r) {
      row_text.clear();
      for (std::int64_t c = 0; c < w.cols(); ++c) {
        const bool set = entry != end && entry->row == r && entry->col == c;
        if (set) {
          ++entry;
        }
        if (c > 0) {
          row_text += ' ';
        }
        row_text += set ? '1' : '0';
      }
      out << row_text << '\n';
    }
    finish_output(out, "layer_" + std::to_string(i + 1) + ".mask");
  }
}

}  // namespace radixnet::io
