#include <doctest.h>

#include <stdexcept>
#include <string>

#include "fa2/graph.hpp"
#include "fa2/style.hpp"

using namespace fa2;

namespace {

Graph continent_graph() {
  Graph g = parse_edge_list("source,target\nA,B\nB,C\nC,A\n");
  g.set_attribute("A", "continent", "Europe");
  g.set_attribute("B", "continent", "Europe");
  g.set_attribute("C", "continent", "Asia");
  return g;
}

}  // namespace

TEST_CASE("node colors: grouping in first-appearance order") {
  const Graph g = continent_graph();
  const Palette palette{{"#111111", "#222222"}};
  const StyleMap style = assign_node_colors(g, "continent", palette);
  CHECK(style.node_colors.at("A") == "#111111");
  CHECK(style.node_colors.at("B") == "#111111");
  CHECK(style.node_colors.at("C") == "#222222");
}

TEST_CASE("node colors: single value, cycling, fallback, override") {
  Graph g = parse_edge_list("source,target\na,b\n");
  g.set_attribute("a", "kind", "same");
  g.set_attribute("b", "kind", "same");
  const StyleMap uniform = assign_node_colors(g, "kind");
  CHECK(uniform.node_colors.at("a") == uniform.node_colors.at("b"));

  Graph wide(true);
  for (int i = 0; i < 7; ++i) {
    wide.ensure_node("n" + std::to_string(i));
    wide.set_attribute("n" + std::to_string(i), "group", "g" + std::to_string(i));
  }
  const Palette six = Palette::default_palette();
  REQUIRE(six.colors.size() == 6);
  const StyleMap cycled = assign_node_colors(wide, "group", six);
  CHECK(cycled.node_colors.at("n6") == six.colors[0]);  // 7th value reuses color 1

  Graph partial = parse_edge_list("source,target\nA,B\n");
  partial.set_attribute("A", "continent", "Europe");
  const StyleMap with_fallback = assign_node_colors(partial, "continent");
  CHECK(with_fallback.node_colors.at("B") == kFallbackColor);

  const StyleMap overridden =
      assign_node_colors(partial, "continent", Palette::default_palette(), {{"Europe", "#123456"}});
  CHECK(overridden.node_colors.at("A") == "#123456");
}

TEST_CASE("node colors: attribute on zero nodes is an error naming it") {
  const Graph g = parse_edge_list("source,target\nA,B\n");
  CHECK_THROWS_WITH_AS(assign_node_colors(g, "continent"), doctest::Contains("continent"),
                       std::runtime_error);
}

TEST_CASE("node colors: assignment is stable across runs") {
  const Graph g = continent_graph();
  const StyleMap s1 = assign_node_colors(g, "continent");
  const StyleMap s2 = assign_node_colors(g, "continent");
  CHECK(s1.node_colors == s2.node_colors);
}

TEST_CASE("edge colors: origin rule per direction") {
  Graph g = parse_edge_list("source,target\nA,B\nB,A\n");
  StyleMap style;
  style.node_colors["A"] = "#FFC0CB";
  style.node_colors["B"] = "#008000";
  const StyleMap with_edges = assign_edge_colors(g, style);
  REQUIRE(with_edges.edge_colors.size() == g.edge_count());
  CHECK(with_edges.edge_colors.at(0) == "#FFC0CB");  // A->B takes A's pink
  CHECK(with_edges.edge_colors.at(1) == "#008000");  // B->A takes B's green

  for (const auto& [edge, color] : with_edges.edge_colors) {
    bool found = false;
    for (const auto& [node, node_color] : with_edges.node_colors) found |= color == node_color;
    CHECK(found);
  }
}

TEST_CASE("edge colors: empty graph and missing node color") {
  Graph none(true);
  none.ensure_node("solo");
  StyleMap style;
  style.node_colors["solo"] = "#111111";
  CHECK(assign_edge_colors(none, style).edge_colors.empty());

  Graph g = parse_edge_list("source,target\nA,B\n");
  StyleMap incomplete;
  incomplete.node_colors["B"] = "#111111";
  CHECK_THROWS_WITH_AS(assign_edge_colors(g, incomplete), doctest::Contains("A"),
                       std::runtime_error);
}

TEST_CASE("sizes: endpoints, constant rule, interpolation") {
  Graph g(true);
  for (const char* id : {"A", "B", "C"}) g.ensure_node(id);
  g.set_attribute("A", "assets", "0");
  g.set_attribute("B", "assets", "50");
  g.set_attribute("C", "assets", "100");

  const StyleMap sized = size_from_attribute(g, "assets", 3.0, 10.0);
  CHECK(sized.node_sizes.at("A") == doctest::Approx(3.0));
  CHECK(sized.node_sizes.at("B") == doctest::Approx(6.5));
  CHECK(sized.node_sizes.at("C") == doctest::Approx(10.0));

  Graph flat(true);
  flat.ensure_node("A");
  flat.ensure_node("B");
  flat.set_attribute("A", "assets", "50");
  flat.set_attribute("B", "assets", "50");
  const StyleMap constant = size_from_attribute(flat, "assets", 3.0, 10.0);
  CHECK(constant.node_sizes.at("A") == doctest::Approx(3.0));
  CHECK(constant.node_sizes.at("B") == doctest::Approx(3.0));
}

TEST_CASE("sizes: monotone in the attribute") {
  Graph g(true);
  for (int i = 0; i < 9; ++i) {
    const std::string id = "n" + std::to_string(i);
    g.ensure_node(id);
    g.set_attribute(id, "v", std::to_string((i * 37) % 90));
  }
  const StyleMap sized = size_from_attribute(g, "v", 1.0, 5.0);
  for (const auto& a : g.nodes()) {
    for (const auto& b : g.nodes()) {
      const double va = std::stod(a.attributes.at("v"));
      const double vb = std::stod(b.attributes.at("v"));
      if (va > vb) CHECK(sized.node_sizes.at(a.id) >= sized.node_sizes.at(b.id));
    }
  }
}

TEST_CASE("sizes: non-numeric and negative values name the node") {
  Graph g(true);
  g.ensure_node("ok");
  g.ensure_node("bad");
  g.set_attribute("ok", "assets", "5");
  g.set_attribute("bad", "assets", "many");
  CHECK_THROWS_WITH_AS(size_from_attribute(g, "assets", 1.0, 2.0), doctest::Contains("bad"),
                       std::runtime_error);
  g.set_attribute("bad", "assets", "-1");
  CHECK_THROWS_WITH_AS(size_from_attribute(g, "assets", 1.0, 2.0), doctest::Contains("bad"),
                       std::runtime_error);
  CHECK_THROWS_AS(size_from_attribute(g, "assets", 3.0, 1.0), std::invalid_argument);
}

TEST_CASE("style JSON: mapping plus fallback") {
  Graph g = continent_graph();
  const std::string json = R"({
    "attribute": "continent",
    "mapping": {"Europe": "#ABCDEF"},
    "fallback": "#010101"
  })";
  const StyleMap style = load_style_json(json, g);
  CHECK(style.node_colors.at("A") == "#ABCDEF");
  CHECK(style.node_colors.at("B") == "#ABCDEF");
  CHECK(style.node_colors.at("C") == Palette::default_palette().colors[0]);

  Graph partial = parse_edge_list("source,target\nA,B\n");
  partial.set_attribute("A", "continent", "Europe");
  const StyleMap fb = load_style_json(json, partial);
  CHECK(fb.node_colors.at("B") == "#010101");

  CHECK_THROWS_AS(load_style_json(R"({"mapping": {}})", g), std::runtime_error);
  CHECK_THROWS_WITH_AS(load_style_json(R"({"attribute":"continent","fallback":"gray"})", g),
                       doctest::Contains("gray"), std::runtime_error);
}

TEST_CASE("hex color validation") {
  CHECK(is_hex_color("#808080"));
  CHECK(is_hex_color("#ABCdef"));
  CHECK_FALSE(is_hex_color("808080"));
  CHECK_FALSE(is_hex_color("#80808"));
  CHECK_FALSE(is_hex_color("#8080808"));
  CHECK_FALSE(is_hex_color("#80808G"));
}
