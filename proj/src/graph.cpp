#include "fa2/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace fa2 {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv_row(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return fields;
}

// Physical (1-based) line numbers are kept for error messages.
struct CsvLine {
  std::size_t number;
  std::string text;
};

std::vector<CsvLine> read_lines(std::string_view text) {
  std::vector<CsvLine> lines;
  std::size_t line_no = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      ++line_no;
      std::string_view raw = text.substr(start, i - start);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (!trim(raw).empty()) lines.push_back({line_no, std::string(raw)});
      start = i + 1;
    }
  }
  return lines;
}

bool parse_number(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  char* end = nullptr;
  out = std::strtod(cell.c_str(), &end);
  return end == cell.c_str() + cell.size() && std::isfinite(out);
}

std::string format_weight(double w) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

long long pair_key(int source, int target) {
  return (static_cast<long long>(source) << 32) | static_cast<unsigned int>(target);
}

}  // namespace

int Graph::ensure_node(std::string_view id) {
  if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
  int idx = static_cast<int>(nodes_.size());
  NodeRecord rec;
  rec.id = std::string(id);
  rec.label = rec.id;
  nodes_.push_back(std::move(rec));
  index_.emplace(std::string(id), idx);
  return idx;
}

void Graph::add_edge(std::string_view source_id, std::string_view target_id, double weight) {
  const int source = ensure_node(source_id);  // registration order matters
  const int target = ensure_node(target_id);
  add_edge(source, target, weight);
}

void Graph::add_edge(int source, int target, double weight) {
  if (source < 0 || target < 0 || source >= static_cast<int>(nodes_.size()) ||
      target >= static_cast<int>(nodes_.size())) {
    throw std::out_of_range("add_edge: endpoint index out of range");
  }
  if (weight < 0.0) throw std::invalid_argument("add_edge: negative weight");
  const long long key = pair_key(source, target);
  if (auto it = edge_slot_.find(key); it != edge_slot_.end()) {
    edges_[it->second].weight += weight;
    return;
  }
  edge_slot_.emplace(key, edges_.size());
  edges_.push_back({source, target, weight});
  nodes_[static_cast<std::size_t>(source)].degree += 1;
  nodes_[static_cast<std::size_t>(target)].degree += 1;
}

void Graph::set_label(std::string_view id, std::string label) {
  nodes_[static_cast<std::size_t>(index_of(id))].label = std::move(label);
}

void Graph::set_attribute(std::string_view id, const std::string& key, std::string value) {
  nodes_[static_cast<std::size_t>(index_of(id))].attributes[key] = std::move(value);
}

std::optional<int> Graph::find_node(std::string_view id) const {
  if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
  return std::nullopt;
}

int Graph::index_of(std::string_view id) const {
  if (auto idx = find_node(id)) return *idx;
  throw std::invalid_argument("unknown node " + std::string(id));
}

int Graph::degree(std::string_view id) const {
  return nodes_[static_cast<std::size_t>(index_of(id))].degree;
}

Graph parse_edge_list(std::string_view text, bool directed) {
  auto lines = read_lines(text);
  std::erase_if(lines, [](const CsvLine& l) { return l.text[0] == '#'; });
  if (lines.empty()) throw std::runtime_error("edge list: missing header");

  const auto header = split_csv_row(lines.front().text);
  bool has_weight = false;
  if (header.size() == 3 && header[2] == "weight") {
    has_weight = true;
  } else if (header.size() != 2) {
    throw std::runtime_error("edge list: unknown header '" + lines.front().text + "'");
  }
  if (header[0] != "source" || header[1] != "target") {
    throw std::runtime_error("edge list: unknown header '" + lines.front().text + "'");
  }

  Graph graph(directed);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto fields = split_csv_row(line.text);
    if (fields.size() != header.size()) {
      throw std::runtime_error("malformed row at line " + std::to_string(line.number) +
                               ": expected " + std::to_string(header.size()) + " fields, got " +
                               std::to_string(fields.size()));
    }
    double weight = 1.0;
    if (has_weight) {
      if (!parse_number(fields[2], weight)) {
        throw std::runtime_error("invalid weight '" + fields[2] + "' at line " +
                                 std::to_string(line.number));
      }
      if (weight < 0.0) {
        throw std::runtime_error("negative weight at line " + std::to_string(line.number));
      }
    }
    graph.add_edge(fields[0], fields[1], weight);
  }
  return graph;
}

Graph parse_weight_matrix(std::string_view text) {
  auto lines = read_lines(text);
  if (lines.empty()) throw std::runtime_error("weight matrix: empty input");

  std::vector<std::vector<std::string>> rows;
  rows.reserve(lines.size());
  for (const auto& line : lines) rows.push_back(split_csv_row(line.text));

  const std::size_t n = rows.size() - 1;
  const auto& header = rows.front();
  if (header.size() != n + 1) {
    throw std::runtime_error("weight matrix is not square: " + std::to_string(n) +
                             " data rows but " + std::to_string(header.size() - 1) +
                             " label columns");
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != n + 1) {
      throw std::runtime_error("weight matrix is not square: row " + std::to_string(r) + " has " +
                               std::to_string(rows[r].size() - 1) + " cells, expected " +
                               std::to_string(n));
    }
  }

  Graph graph(true);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::string& label = header[j];
    if (label.empty()) throw std::runtime_error("weight matrix: empty label in column " + std::to_string(j));
    if (graph.find_node(label)) throw std::runtime_error("weight matrix: duplicate label '" + label + "'");
    graph.ensure_node(label);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (rows[i][0] != header[i]) {
      throw std::runtime_error("weight matrix: row label '" + rows[i][0] +
                               "' does not match column label '" + header[i] + "' at index " +
                               std::to_string(i));
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      double w = 0.0;
      if (!parse_number(rows[i][j], w)) {
        throw std::runtime_error("weight matrix: invalid cell at row " + std::to_string(i) +
                                 ", column " + std::to_string(j) + ": '" + rows[i][j] + "'");
      }
      if (w > 0.0) graph.add_edge(static_cast<int>(i - 1), static_cast<int>(j - 1), w);
    }
  }
  return graph;
}

void parse_node_attributes(std::string_view text, Graph& graph) {
  auto lines = read_lines(text);
  if (lines.empty()) return;  // empty file leaves the graph unchanged

  const auto header = split_csv_row(lines.front().text);
  if (header.empty() || header[0] != "id") {
    throw std::runtime_error("node attributes: header must start with 'id'");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto fields = split_csv_row(line.text);
    if (fields.size() != header.size()) {
      throw std::runtime_error("malformed row at line " + std::to_string(line.number) +
                               ": expected " + std::to_string(header.size()) + " fields, got " +
                               std::to_string(fields.size()));
    }
    if (!graph.find_node(fields[0])) {
      throw std::runtime_error("unknown node " + fields[0] + " at line " +
                               std::to_string(line.number));
    }
    for (std::size_t c = 1; c < header.size(); ++c) {
      if (fields[c].empty()) continue;
      if (header[c] == "label") {
        graph.set_label(fields[0], fields[c]);
      } else {
        graph.set_attribute(fields[0], header[c], fields[c]);
      }
    }
  }
}

std::string to_edge_list_csv(const Graph& graph) {
  // Isolated nodes are not representable in edge-list CSV.
  std::string out = "source,target,weight\n";
  for (const auto& e : graph.edges()) {
    out += graph.node(e.source).id;
    out += ',';
    out += graph.node(e.target).id;
    out += ',';
    out += format_weight(e.weight);
    out += '\n';
  }
  return out;
}

}  // namespace fa2
