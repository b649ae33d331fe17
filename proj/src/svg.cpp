#include "fa2/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace fa2 {

namespace {

struct BBox {
  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void include(const PositionMatrix& layout) {
    if (layout.rows() == 0) return;
    min_x = std::min(min_x, layout.col(0).minCoeff());
    max_x = std::max(max_x, layout.col(0).maxCoeff());
    min_y = std::min(min_y, layout.col(1).minCoeff());
    max_y = std::max(max_y, layout.col(1).maxCoeff());
  }
  bool valid() const { return min_x <= max_x; }
};

// Uniform scale + offset; flips y so layout +y points up on screen.
struct FitTransform {
  double scale = 1.0;
  double offset_x = 0.0;
  double offset_y = 0.0;
  double min_x = 0.0;
  double max_y = 0.0;

  static FitTransform fit(const BBox& box, const RenderSpec& spec) {
    FitTransform t;
    if (!box.valid()) return t;
    const double usable_w = spec.canvas_width * (1.0 - 2.0 * spec.margin);
    const double usable_h = spec.canvas_height * (1.0 - 2.0 * spec.margin);
    const double extent_x = box.max_x - box.min_x;
    const double extent_y = box.max_y - box.min_y;
    double scale = 1.0;
    if (extent_x > 0.0 || extent_y > 0.0) {
      scale = std::numeric_limits<double>::infinity();
      if (extent_x > 0.0) scale = std::min(scale, usable_w / extent_x);
      if (extent_y > 0.0) scale = std::min(scale, usable_h / extent_y);
    }
    t.scale = scale;
    t.min_x = box.min_x;
    t.max_y = box.max_y;
    t.offset_x = spec.canvas_width * spec.margin + (usable_w - extent_x * scale) / 2.0;
    t.offset_y = spec.canvas_height * spec.margin + (usable_h - extent_y * scale) / 2.0;
    return t;
  }

  double px(double x) const { return offset_x + (x - min_x) * scale; }
  double py(double y) const { return offset_y + (max_y - y) * scale; }
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.8f", v);
  return buf;
}

std::string dim(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string color_for_node(const StyleMap& style, const std::string& id) {
  const auto it = style.node_colors.find(id);
  return it == style.node_colors.end() ? std::string(kFallbackColor) : it->second;
}

double size_for_node(const StyleMap& style, const std::string& id, const RenderSpec& spec) {
  const auto it = style.node_sizes.find(id);
  return it == style.node_sizes.end() ? spec.default_vertex_size : it->second;
}

std::string render_with_bbox(const Graph& graph, const PositionMatrix& layout,
                             const StyleMap& style, const RenderSpec& spec, const BBox& box) {
  if (layout.rows() != static_cast<Eigen::Index>(graph.node_count())) {
    throw std::invalid_argument("render_svg: layout has " + std::to_string(layout.rows()) +
                                " rows, graph has " + std::to_string(graph.node_count()) +
                                " nodes");
  }
  if (!(spec.canvas_width > 0.0) || !(spec.canvas_height > 0.0)) {
    throw std::invalid_argument("render_svg: canvas must be positive");
  }

  const FitTransform t = FitTransform::fit(box, spec);
  const double radius_unit = std::min(spec.canvas_width, spec.canvas_height) / 200.0;
  const double arrow_len = spec.edge_arrow_size * std::min(spec.canvas_width, spec.canvas_height) / 40.0;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + dim(spec.canvas_width) +
         "\" height=\"" + dim(spec.canvas_height) + "\" viewBox=\"0 0 " +
         dim(spec.canvas_width) + " " + dim(spec.canvas_height) + "\">\n";

  // edges first so nodes draw on top
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto& edge = graph.edges()[e];
    const double x1 = t.px(layout(edge.source, 0)), y1 = t.py(layout(edge.source, 1));
    const double x2 = t.px(layout(edge.target, 0)), y2 = t.py(layout(edge.target, 1));
    std::string color = spec.edge_color.value_or("");
    if (color.empty()) {
      const auto it = style.edge_colors.find(e);
      color = it == style.edge_colors.end() ? std::string(kFallbackColor) : it->second;
    }
    std::string d = "M " + num(x1) + " " + num(y1) + " L " + num(x2) + " " + num(y2);
    bool filled = false;
    const double dx = x2 - x1, dy = y2 - y1;
    const double len = std::hypot(dx, dy);
    const double r_target =
        size_for_node(style, graph.node(edge.target).id, spec) * radius_unit;
    if (graph.directed() && arrow_len > 0.0 && len > r_target + arrow_len) {
      // arrow tip sits on the target circle's rim; skipped when the circles
      // overlap so far that there is no room for it
      const double ux = dx / len, uy = dy / len;
      const double tip_x = x2 - ux * r_target, tip_y = y2 - uy * r_target;
      const double base_x = tip_x - ux * arrow_len, base_y = tip_y - uy * arrow_len;
      const double half_w = 0.35 * arrow_len;
      d += " M " + num(tip_x) + " " + num(tip_y);
      d += " L " + num(base_x - uy * half_w) + " " + num(base_y + ux * half_w);
      d += " L " + num(base_x + uy * half_w) + " " + num(base_y - ux * half_w);
      d += " Z";
      filled = true;
    }
    svg += "<path d=\"" + d + "\" stroke=\"" + color + "\" stroke-width=\"1\" fill=\"" +
           (filled ? color : std::string("none")) + "\"/>\n";
  }

  for (Eigen::Index i = 0; i < layout.rows(); ++i) {
    const auto& node = graph.node(static_cast<int>(i));
    const double r = size_for_node(style, node.id, spec) * radius_unit;
    svg += "<circle cx=\"" + num(t.px(layout(i, 0))) + "\" cy=\"" + num(t.py(layout(i, 1))) +
           "\" r=\"" + num(r) + "\" fill=\"" + color_for_node(style, node.id) + "\"/>\n";
  }

  if (spec.draw_labels) {
    for (Eigen::Index i = 0; i < layout.rows(); ++i) {
      const auto& node = graph.node(static_cast<int>(i));
      const double r = size_for_node(style, node.id, spec) * radius_unit;
      svg += "<text x=\"" + num(t.px(layout(i, 0))) + "\" y=\"" +
             num(t.py(layout(i, 1)) - r - 4.0) + "\" font-size=\"" + dim(spec.label_size) +
             "em\" fill=\"" + spec.vertex_label_color + "\" text-anchor=\"middle\">" +
             escape_xml(node.label) + "</text>\n";
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string render_svg(const Graph& graph, const PositionMatrix& layout, const StyleMap& style,
                       const RenderSpec& spec) {
  BBox box;
  box.include(layout);
  return render_with_bbox(graph, layout, style, spec, box);
}

std::vector<std::pair<int, std::string>> render_snapshots(
    const Graph& graph, const std::vector<std::pair<int, PositionMatrix>>& snapshots,
    const StyleMap& style, const RenderSpec& spec) {
  BBox box;
  for (const auto& [iteration, layout] : snapshots) box.include(layout);
  std::vector<std::pair<int, std::string>> out;
  out.reserve(snapshots.size());
  for (const auto& [iteration, layout] : snapshots) {
    out.emplace_back(iteration, render_with_bbox(graph, layout, style, spec, box));
  }
  return out;
}

}  // namespace fa2
