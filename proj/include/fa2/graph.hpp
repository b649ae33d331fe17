#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fa2 {

struct NodeRecord {
  std::string id;
  std::string label;
  std::map<std::string, std::string> attributes;
  int degree = 0;  // total endpoint count; a self-loop counts 2
};

struct Edge {
  int source = -1;  // index into Graph::nodes()
  int target = -1;
  double weight = 1.0;
};

/// Node registry plus weighted directed edge list. Node order is
/// first-appearance order and defines the row index used by every
/// position/force matrix. Duplicate (source, target) pairs are merged
/// by summing their weights. Immutable by convention after ingestion;
/// concurrent reads are safe.
class Graph {
 public:
  explicit Graph(bool directed = true) : directed_(directed) {}

  /// Registers the id if unseen and returns its index.
  int ensure_node(std::string_view id);

  /// Adds an edge, merging into an existing (source, target) pair if present.
  /// Throws on negative weight or unknown endpoint.
  void add_edge(std::string_view source_id, std::string_view target_id, double weight = 1.0);
  void add_edge(int source, int target, double weight = 1.0);

  void set_label(std::string_view id, std::string label);
  void set_attribute(std::string_view id, const std::string& key, std::string value);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }
  bool directed() const { return directed_; }

  const std::vector<NodeRecord>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const NodeRecord& node(int index) const { return nodes_.at(static_cast<std::size_t>(index)); }

  std::optional<int> find_node(std::string_view id) const;
  /// Index lookup that throws naming the id when absent.
  int index_of(std::string_view id) const;

  /// Endpoint count incident to the node; throws on unknown id.
  int degree(std::string_view id) const;

 private:
  std::vector<NodeRecord> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> index_;
  std::unordered_map<long long, std::size_t> edge_slot_;  // (source, target) -> edges_ index
  bool directed_ = true;
};

/// Parses CSV with header `source,target[,weight]`. Lines starting with `#`
/// are skipped; a missing weight column means weight 1.0. Nodes register in
/// first-appearance order.
Graph parse_edge_list(std::string_view text, bool directed = true);

/// Parses a square CSV whose first row and column carry node labels
/// (cell (0,0) empty or "id"). Entry (i,j) > 0 becomes a directed edge
/// row-label -> column-label; the diagonal is ignored.
Graph parse_weight_matrix(std::string_view text);

/// Attaches attributes from CSV with header `id[,label][,attr...]` to an
/// already-ingested graph. Every id in the file must exist in the graph.
void parse_node_attributes(std::string_view text, Graph& graph);

/// Serializes back to edge-list CSV (header `source,target,weight`),
/// nodes appearing in registry order. parse(serialize(g)) == g.
std::string to_edge_list_csv(const Graph& graph);

}  // namespace fa2
