#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fa2/engine.hpp"
#include "fa2/graph.hpp"
#include "fa2/types.hpp"

namespace fa2 {

struct PeriodSpec {
  std::string label;
  std::string graph_file;
};

struct TimeSeriesManifest {
  std::vector<PeriodSpec> periods;
  Fa2Params params;
  bool chain = true;
  bool matrix = false;  // period files are weight matrices instead of edge lists
};

/// Parses {"periods":[{"label":...,"graph":...},...],"params":{...},"chain":bool}.
/// Relative graph paths resolve against `base_dir`.
TimeSeriesManifest parse_manifest_json(const std::string& text, const std::string& base_dir);

/// Builds period k's starting positions from period k-1's result: nodes
/// present in both keep their previous position, new nodes draw seeded random
/// positions, departed nodes are dropped.
PositionMatrix chain_warm_start(const Graph& prev_graph, const PositionMatrix& prev_layout,
                                const Graph& next_graph, std::uint64_t seed_for_new_nodes);

struct PeriodResult {
  std::string label;
  PositionMatrix layout;
  LayoutResult full;
};

struct TransitionReport {
  std::string from_label;
  std::string to_label;
  std::vector<std::string> node_ids;  // nodes present in both periods
  VectorN displacement;               // per common node
  double mean_displacement = 0.0;
  double prev_diameter = 0.0;         // max pairwise distance of the earlier layout
};

struct TimeSeriesResult {
  std::vector<PeriodResult> periods;
  std::vector<TransitionReport> transitions;
};

/// Lays out each period in sequence. With chaining each period warm-starts
/// from its predecessor; without it every period starts fresh. `start`, when
/// given, seeds period 1 instead of random positions. The seed of period k
/// is params.seed + k, so runs are reproducible either way.
TimeSeriesResult run_time_series(const std::vector<std::pair<std::string, Graph>>& periods,
                                 const Fa2Params& params, bool chain,
                                 const std::optional<PositionMatrix>& start = std::nullopt,
                                 int threads = 1);

/// `from,to,node,displacement` rows, one per common node per transition.
std::string format_displacement_csv(const std::vector<TransitionReport>& transitions);

double layout_diameter(const PositionMatrix& layout);

}  // namespace fa2
