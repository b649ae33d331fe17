#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fa2/engine.hpp"
#include "fa2/graph.hpp"
#include "fa2/types.hpp"

namespace fa2 {

/// A layout read from disk: ids paired with coordinate rows, file order.
struct NamedLayout {
  std::vector<std::string> ids;
  PositionMatrix positions;
};

/// `node_id<TAB>x<TAB>y`, one row per node in graph order, 17 significant
/// digits (doubles round-trip exactly).
std::string format_layout_tsv(const Graph& graph, const PositionMatrix& positions);

NamedLayout parse_layout_tsv(std::string_view text);

/// Reorders a named layout into graph row order. Throws naming the row-count
/// mismatch or the offending node ids when the id sets differ.
PositionMatrix layout_for_graph(const NamedLayout& layout, const Graph& graph);

/// `iteration,global_swinging,global_traction,global_speed,effective_tolerance`.
std::string format_diagnostics_csv(const std::vector<IterationDiagnostics>& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace fa2
