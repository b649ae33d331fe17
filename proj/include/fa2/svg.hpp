#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fa2/graph.hpp"
#include "fa2/style.hpp"
#include "fa2/types.hpp"

namespace fa2 {

struct RenderSpec {
  double label_size = 3.0;                  // em units
  double default_vertex_size = 3.0;         // used when StyleMap has no size
  double edge_arrow_size = 0.2;
  std::string vertex_label_color = "black";
  std::optional<std::string> edge_color;    // overrides per-edge colors
  double canvas_width = 2000.0;
  double canvas_height = 2000.0;
  double margin = 0.05;                     // fraction of each canvas dimension
  bool draw_labels = true;
};

/// Standalone SVG 1.1 document: one path per edge (arrowheads folded into the
/// path for directed graphs), one circle per node drawn on top, optional text
/// labels. The layout is fit to the canvas minus margin with aspect ratio
/// preserved and +y mapped to screen up. Node radius is
/// vertex_size * min(canvas)/200 px. Output is deterministic.
std::string render_svg(const Graph& graph, const PositionMatrix& layout, const StyleMap& style,
                       const RenderSpec& spec = {});

/// One SVG per snapshot, all sharing the union bounding box as viewport so
/// node motion is visible across frames.
std::vector<std::pair<int, std::string>> render_snapshots(
    const Graph& graph, const std::vector<std::pair<int, PositionMatrix>>& snapshots,
    const StyleMap& style, const RenderSpec& spec = {});

}  // namespace fa2
