#include "fa2/layout_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fa2 {

namespace {

std::string format_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string format_layout_tsv(const Graph& graph, const PositionMatrix& positions) {
  if (positions.rows() != static_cast<Eigen::Index>(graph.node_count())) {
    throw std::invalid_argument("layout has " + std::to_string(positions.rows()) +
                                " rows, graph has " + std::to_string(graph.node_count()) +
                                " nodes");
  }
  std::string out;
  for (Eigen::Index i = 0; i < positions.rows(); ++i) {
    out += graph.node(static_cast<int>(i)).id;
    out += '\t';
    out += format_coord(positions(i, 0));
    out += '\t';
    out += format_coord(positions(i, 1));
    out += '\n';
  }
  return out;
}

NamedLayout parse_layout_tsv(std::string_view text) {
  NamedLayout layout;
  std::vector<std::pair<double, double>> coords;
  std::size_t line_no = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != '\n') continue;
    ++line_no;
    std::string_view line = text.substr(start, i - start);
    start = i + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw std::runtime_error("layout TSV: malformed row at line " + std::to_string(line_no));
    }
    const std::string xs(line.substr(t1 + 1, t2 - t1 - 1));
    const std::string ys(line.substr(t2 + 1));
    char* end = nullptr;
    const double x = std::strtod(xs.c_str(), &end);
    if (end != xs.c_str() + xs.size()) {
      throw std::runtime_error("layout TSV: invalid x at line " + std::to_string(line_no));
    }
    const double y = std::strtod(ys.c_str(), &end);
    if (end != ys.c_str() + ys.size()) {
      throw std::runtime_error("layout TSV: invalid y at line " + std::to_string(line_no));
    }
    layout.ids.emplace_back(line.substr(0, t1));
    coords.emplace_back(x, y);
  }
  layout.positions.resize(static_cast<Eigen::Index>(coords.size()), 2);
  for (std::size_t r = 0; r < coords.size(); ++r) {
    layout.positions(static_cast<Eigen::Index>(r), 0) = coords[r].first;
    layout.positions(static_cast<Eigen::Index>(r), 1) = coords[r].second;
  }
  return layout;
}

PositionMatrix layout_for_graph(const NamedLayout& layout, const Graph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.node_count());
  if (layout.positions.rows() != n) {
    throw std::runtime_error("layout row mismatch: expected " + std::to_string(n) +
                             " rows, got " + std::to_string(layout.positions.rows()));
  }
  PositionMatrix ordered(n, 2);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::string unknown;
  for (std::size_t r = 0; r < layout.ids.size(); ++r) {
    const auto idx = graph.find_node(layout.ids[r]);
    if (!idx) {
      unknown += unknown.empty() ? "" : ", ";
      unknown += layout.ids[r];
      continue;
    }
    seen[static_cast<std::size_t>(*idx)] = true;
    ordered.row(*idx) = layout.positions.row(static_cast<Eigen::Index>(r));
  }
  if (!unknown.empty()) {
    throw std::runtime_error("layout names nodes not in the graph: " + unknown);
  }
  std::string missing;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) {
      missing += missing.empty() ? "" : ", ";
      missing += graph.node(static_cast<int>(i)).id;
    }
  }
  if (!missing.empty()) {
    throw std::runtime_error("layout is missing nodes: " + missing);
  }
  return ordered;
}

std::string format_diagnostics_csv(const std::vector<IterationDiagnostics>& trace) {
  std::string out = "iteration,global_swinging,global_traction,global_speed,effective_tolerance\n";
  char buf[200];
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& d = trace[i];
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g\n", i + 1, d.global_swinging,
                  d.global_traction, d.global_speed, d.effective_tolerance);
    out += buf;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace fa2
