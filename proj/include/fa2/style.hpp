#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "fa2/graph.hpp"

namespace fa2 {

/// Ordered color cycle. The default follows the continent scheme:
/// blue, purple, pink, orange, green, red.
struct Palette {
  std::vector<std::string> colors;

  static Palette default_palette();
};

inline constexpr const char* kFallbackColor = "#808080";

struct StyleMap {
  std::map<std::string, std::string> node_colors;  // node id -> #rrggbb
  std::map<std::size_t, std::string> edge_colors;  // edge index -> #rrggbb
  std::map<std::string, double> node_sizes;        // node id -> render units
};

bool is_hex_color(std::string_view color);

/// Maps distinct attribute values to palette colors in first-appearance order
/// of the node listing, cycling when the palette runs out. Nodes missing the
/// attribute get `fallback`. Entries in `overrides` pin specific values to
/// specific colors. Throws when no node carries the attribute.
StyleMap assign_node_colors(const Graph& graph, const std::string& attribute,
                            const Palette& palette = Palette::default_palette(),
                            const std::map<std::string, std::string>& overrides = {},
                            const std::string& fallback = kFallbackColor);

/// Colors each directed edge with its source node's color. Every node must
/// already have a color.
StyleMap assign_edge_colors(const Graph& graph, const StyleMap& style);

/// Linearly rescales a numeric attribute onto [min_size, max_size]; a
/// constant attribute puts every node at min_size, and so does a missing one.
StyleMap size_from_attribute(const Graph& graph, const std::string& attribute, double min_size,
                             double max_size, const StyleMap& base = {});

/// Style-file loader: {"attribute": ..., "mapping": {value: "#rrggbb"},
/// "fallback": "#rrggbb"}. mapping and fallback are optional.
StyleMap load_style_json(const std::string& json_text, const Graph& graph);

}  // namespace fa2
