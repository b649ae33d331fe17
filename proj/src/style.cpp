#include "fa2/style.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace fa2 {

Palette Palette::default_palette() {
  return Palette{{"#0000FF", "#800080", "#FFC0CB", "#FFA500", "#008000", "#FF0000"}};
}

bool is_hex_color(std::string_view color) {
  if (color.size() != 7 || color[0] != '#') return false;
  for (std::size_t i = 1; i < 7; ++i) {
    if (!std::isxdigit(static_cast<unsigned char>(color[i]))) return false;
  }
  return true;
}

StyleMap assign_node_colors(const Graph& graph, const std::string& attribute,
                            const Palette& palette, const std::map<std::string, std::string>& overrides,
                            const std::string& fallback) {
  if (palette.colors.empty()) throw std::invalid_argument("palette is empty");

  StyleMap style;
  std::map<std::string, std::string> value_color;
  std::size_t next_color = 0;
  bool attribute_seen = false;
  for (const auto& node : graph.nodes()) {
    const auto it = node.attributes.find(attribute);
    if (it == node.attributes.end()) {
      style.node_colors[node.id] = fallback;
      continue;
    }
    attribute_seen = true;
    auto [slot, inserted] = value_color.try_emplace(it->second);
    if (inserted) {
      if (const auto ov = overrides.find(it->second); ov != overrides.end()) {
        slot->second = ov->second;
      } else {
        slot->second = palette.colors[next_color % palette.colors.size()];
        ++next_color;
      }
    }
    style.node_colors[node.id] = slot->second;
  }
  if (!attribute_seen) {
    throw std::runtime_error("attribute '" + attribute + "' is set on no node");
  }
  return style;
}

StyleMap assign_edge_colors(const Graph& graph, const StyleMap& style) {
  StyleMap out = style;
  out.edge_colors.clear();
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto& source = graph.node(graph.edges()[e].source);
    const auto it = out.node_colors.find(source.id);
    if (it == out.node_colors.end()) {
      throw std::runtime_error("no color assigned to node " + source.id);
    }
    out.edge_colors[e] = it->second;
  }
  return out;
}

StyleMap size_from_attribute(const Graph& graph, const std::string& attribute, double min_size,
                             double max_size, const StyleMap& base) {
  if (min_size > max_size) throw std::invalid_argument("min_size must be <= max_size");

  StyleMap out = base;
  std::map<std::string, double> values;
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& node : graph.nodes()) {
    const auto it = node.attributes.find(attribute);
    if (it == node.attributes.end()) continue;
    char* end = nullptr;
    const double v = std::strtod(it->second.c_str(), &end);
    if (end != it->second.c_str() + it->second.size() || it->second.empty()) {
      throw std::runtime_error("non-numeric value '" + it->second + "' for attribute '" +
                               attribute + "' on node " + node.id);
    }
    if (v < 0.0) {
      throw std::runtime_error("negative value for attribute '" + attribute + "' on node " +
                               node.id);
    }
    values[node.id] = v;
    lo = first ? v : std::min(lo, v);
    hi = first ? v : std::max(hi, v);
    first = false;
  }
  const double span = hi - lo;
  for (const auto& node : graph.nodes()) {
    const auto it = values.find(node.id);
    if (it == values.end() || span == 0.0) {
      out.node_sizes[node.id] = min_size;
      continue;
    }
    out.node_sizes[node.id] = min_size + (max_size - min_size) * (it->second - lo) / span;
  }
  return out;
}

StyleMap load_style_json(const std::string& json_text, const Graph& graph) {
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.contains("attribute")) {
    throw std::runtime_error("style file: missing \"attribute\"");
  }
  const auto attribute = doc.at("attribute").get<std::string>();
  std::string fallback = kFallbackColor;
  if (doc.contains("fallback")) fallback = doc.at("fallback").get<std::string>();
  if (!is_hex_color(fallback)) {
    throw std::runtime_error("style file: fallback '" + fallback + "' is not #rrggbb");
  }
  std::map<std::string, std::string> overrides;
  if (doc.contains("mapping")) {
    for (const auto& [value, color] : doc.at("mapping").items()) {
      const auto hex = color.get<std::string>();
      if (!is_hex_color(hex)) {
        throw std::runtime_error("style file: color '" + hex + "' is not #rrggbb");
      }
      overrides[value] = hex;
    }
  }
  return assign_node_colors(graph, attribute, Palette::default_palette(), overrides, fallback);
}

}  // namespace fa2
