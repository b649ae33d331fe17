#include "fa2/timeseries.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include <json.hpp>

namespace fa2 {

namespace {

Fa2Params params_from_json(const nlohmann::json& doc) {
  Fa2Params p;
  if (doc.contains("iterations")) p.iterations = doc.at("iterations").get<int>();
  if (doc.contains("plotstep")) p.plotstep = doc.at("plotstep").get<int>();
  if (doc.contains("linlog")) p.linlog = doc.at("linlog").get<bool>();
  if (doc.contains("stronggravity")) p.strong_gravity = doc.at("stronggravity").get<bool>();
  if (doc.contains("gravity")) p.gravity_constant = doc.at("gravity").get<double>();
  if (doc.contains("jittertol")) p.tolerance = doc.at("jittertol").get<double>();
  if (doc.contains("scaling")) p.scaling_s = doc.at("scaling").get<double>();
  if (doc.contains("delta")) p.edge_weight_influence = doc.at("delta").get<int>();
  if (doc.contains("ks")) p.speed_constant = doc.at("ks").get<double>();
  if (doc.contains("seed")) p.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("adaptive")) p.adaptive_tolerance = doc.at("adaptive").get<bool>();
  if (doc.contains("center")) {
    const auto& c = doc.at("center");
    if (!c.is_array() || c.size() != 2) {
      throw std::runtime_error("manifest: center must be [x, y]");
    }
    p.center = Vec2(c[0].get<double>(), c[1].get<double>());
  }
  p.validate();
  return p;
}

}  // namespace

TimeSeriesManifest parse_manifest_json(const std::string& text, const std::string& base_dir) {
  const auto doc = nlohmann::json::parse(text);
  TimeSeriesManifest manifest;
  if (!doc.contains("periods") || !doc.at("periods").is_array() || doc.at("periods").empty()) {
    throw std::runtime_error("manifest: needs a nonempty \"periods\" array");
  }
  for (const auto& entry : doc.at("periods")) {
    PeriodSpec spec;
    spec.label = entry.at("label").get<std::string>();
    spec.graph_file = entry.at("graph").get<std::string>();
    std::filesystem::path p(spec.graph_file);
    if (p.is_relative() && !base_dir.empty()) {
      spec.graph_file = (std::filesystem::path(base_dir) / p).string();
    }
    manifest.periods.push_back(std::move(spec));
  }
  if (doc.contains("params")) manifest.params = params_from_json(doc.at("params"));
  if (doc.contains("chain")) manifest.chain = doc.at("chain").get<bool>();
  if (doc.contains("matrix")) manifest.matrix = doc.at("matrix").get<bool>();
  return manifest;
}

PositionMatrix chain_warm_start(const Graph& prev_graph, const PositionMatrix& prev_layout,
                                const Graph& next_graph, std::uint64_t seed_for_new_nodes) {
  const auto n = static_cast<Eigen::Index>(next_graph.node_count());
  PositionMatrix warm = random_positions(n, seed_for_new_nodes);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto prev_idx = prev_graph.find_node(next_graph.node(static_cast<int>(i)).id);
    if (prev_idx) warm.row(i) = prev_layout.row(*prev_idx);
  }
  return warm;
}

double layout_diameter(const PositionMatrix& layout) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < layout.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < layout.rows(); ++j) {
      best = std::max(best, (layout.row(i) - layout.row(j)).norm());
    }
  }
  return best;
}

TimeSeriesResult run_time_series(const std::vector<std::pair<std::string, Graph>>& periods,
                                 const Fa2Params& params, bool chain,
                                 const std::optional<PositionMatrix>& start, int threads) {
  if (periods.empty()) throw std::invalid_argument("run_time_series: no periods");
  const std::uint64_t base_seed = params.seed.value_or(0);

  TimeSeriesResult result;
  for (std::size_t k = 0; k < periods.size(); ++k) {
    const auto& [label, graph] = periods[k];
    Fa2Params period_params = params;
    period_params.seed = base_seed + k;

    std::optional<PositionMatrix> warm;
    if (k == 0 && start) {
      warm = start;
    } else if (chain && k > 0) {
      const auto& prev = result.periods.back();
      warm = chain_warm_start(periods[k - 1].second, prev.layout, graph, base_seed + k);
    }
    LayoutResult run;
    try {
      run = run_layout(graph, period_params, warm, threads);
    } catch (const std::exception& e) {
      throw std::runtime_error("period '" + label + "': " + e.what());
    }

    if (k > 0) {
      const auto& prev_graph = periods[k - 1].second;
      const auto& prev_layout = result.periods.back().layout;
      TransitionReport report;
      report.from_label = periods[k - 1].first;
      report.to_label = label;
      for (const auto& node : graph.nodes()) {
        if (prev_graph.find_node(node.id)) report.node_ids.push_back(node.id);
      }
      report.displacement.resize(static_cast<Eigen::Index>(report.node_ids.size()));
      for (std::size_t m = 0; m < report.node_ids.size(); ++m) {
        const auto cur = graph.find_node(report.node_ids[m]);
        const auto old = prev_graph.find_node(report.node_ids[m]);
        report.displacement[static_cast<Eigen::Index>(m)] =
            (run.positions.row(*cur) - prev_layout.row(*old)).norm();
      }
      report.mean_displacement =
          report.displacement.size() == 0 ? 0.0 : report.displacement.mean();
      report.prev_diameter = layout_diameter(prev_layout);
      result.transitions.push_back(std::move(report));
    }

    PeriodResult pr;
    pr.label = label;
    pr.layout = run.positions;
    pr.full = std::move(run);
    result.periods.push_back(std::move(pr));
  }
  return result;
}

std::string format_displacement_csv(const std::vector<TransitionReport>& transitions) {
  std::string out = "from,to,node,displacement\n";
  char buf[64];
  for (const auto& t : transitions) {
    for (std::size_t i = 0; i < t.node_ids.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", t.displacement[static_cast<Eigen::Index>(i)]);
      out += t.from_label + "," + t.to_label + "," + t.node_ids[i] + "," + buf + "\n";
    }
  }
  return out;
}

}  // namespace fa2
