// Acceptance suite: ten end-to-end criteria, one pass/fail line each.
// Every tolerance is pinned in code next to the check it gates.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fa2/bench.hpp"
#include "fa2/engine.hpp"
#include "fa2/graph.hpp"
#include "fa2/layout_io.hpp"
#include "fa2/svg.hpp"
#include "fa2/timeseries.hpp"
#include "fa2/transforms.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"
#include "support/xml_check.hpp"

using namespace fa2;
using fa2::testing::oracle_net_forces;
using fa2::testing::planted_partition_graph;
using fa2::testing::random_layout;
using fa2::testing::random_params;
using fa2::testing::random_small_graph;
using fa2::testing::relative_force_error;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Graph two_node_graph() {
  Graph g(false);
  g.add_edge("A", "B", 1.0);
  return g;
}

PositionMatrix start_pair() {
  PositionMatrix p(2, 2);
  p << 0, 0, 1, 0;
  return p;
}

bool bitwise_equal(const PositionMatrix& a, const PositionMatrix& b) {
  return a.rows() == b.rows() && (a.array() == b.array()).all();
}

char buffer[512];

bool criterion_two_node_equilibrium(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  Fa2Params params;
  params.adaptive_tolerance = false;  // fixed tau = 1
  params.iterations = 500;
  params.plotstep = 0;
  const LayoutResult run = run_layout(two_node_graph(), params, start_pair());
  const double d = (run.positions.row(0) - run.positions.row(1)).norm();
  const double target = std::sqrt(40.0);
  const double elapsed = seconds_since(start);
  std::snprintf(buffer, sizeof(buffer), "distance %.4f vs sqrt(40)=%.4f (%.2f s)", d, target,
                elapsed);
  detail = buffer;
  return std::abs(d - target) / target <= 0.10 && elapsed < 1.0;
}

bool criterion_hand_trace(std::string& detail) {
  Fa2Params params;
  params.adaptive_tolerance = false;
  params.iterations = 1;
  params.plotstep = 0;
  const Graph g = two_node_graph();

  const ForceField field = compute_forces(g, start_pair(), params);
  const bool forces_ok = std::abs(field.net(0, 0) + 39.0) <= 1e-9 * 39.0 &&
                         std::abs(field.net(1, 0) - 39.0) <= 1e-9 * 39.0 &&
                         field.net.col(1).norm() == 0.0;

  // full-precision hand evaluation, zero previous force
  const double swg = 39.0;
  const double swg_g = 2.0 * swg + 2.0 * swg;
  const double tra_g = 2.0 * (swg / 2.0) + 2.0 * (swg / 2.0);
  const double s_g = 1.0 * tra_g / swg_g;
  const double s_n = 1.0 * s_g / (1.0 + s_g * std::sqrt(swg));
  const double displacement = s_n * 39.0;

  const LayoutResult run = run_layout(g, params, start_pair());
  const double moved = run.positions(1, 0) - 1.0;
  const bool displacement_ok = std::abs(moved - displacement) <= 1e-9 * displacement &&
                               std::abs(run.positions(0, 0) + displacement) <= 1e-9 * displacement;
  // the spec's printed approximation of the same quantity
  const bool printed_ok = std::abs(displacement - 4.7299) / 4.7299 < 1e-3;

  std::snprintf(buffer, sizeof(buffer), "net +-39, displacement %.7f (hand %.7f)", moved,
                displacement);
  detail = buffer;
  return forces_ok && displacement_ok && printed_ok;
}

bool criterion_oracle_equivalence(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_small_graph(rng, 8);
    Fa2Params params = random_params(rng);
    params.adaptive_tolerance = trial % 2 == 0;
    const auto n = static_cast<Eigen::Index>(g.node_count());
    LayoutState state{random_layout(rng, n), ForceMatrix::Zero(n, 2), 0.0, 0};
    for (int iter = 0; iter < 3; ++iter) {
      const ForceField engine = compute_forces(g, state.positions, params);
      const ForceMatrix oracle = oracle_net_forces(g, state.positions, params);
      worst = std::max(worst, relative_force_error(engine.net, oracle));
      step_layout(g, state, params);
    }
  }
  const double elapsed = seconds_since(start);
  std::snprintf(buffer, sizeof(buffer),
                "100 graphs x 3 iterations, worst relative error %.2e (%.2f s)", worst, elapsed);
  detail = buffer;
  return worst < 1e-9 && elapsed < 30.0;
}

bool criterion_property_suite(std::string& detail) {
  std::mt19937_64 rng(77);
  std::string failing;

  // Newton's third law over internal forces
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_small_graph(rng, 8);
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Fa2Params params = random_params(rng);
    const ForceField f = compute_forces(g, random_layout(rng, n), params);
    const double scale = std::max(1.0, (f.repulsion + f.attraction).rowwise().norm().sum());
    if ((f.repulsion + f.attraction).colwise().sum().norm() / scale >= 1e-9) {
      failing = "newton";
    }
  }

  // zero-degree repulsion is strictly positive
  {
    Graph isolated(false);
    isolated.ensure_node("a");
    isolated.ensure_node("b");
    PositionMatrix pos(2, 2);
    pos << 0, 0, 2, 0;
    if (repulsion_forces(isolated, pos, 10.0).rowwise().norm().minCoeff() <= 0.0) {
      failing = "zero-degree repulsion";
    }
  }

  // determinism: same seed, worker counts 1/2/4
  {
    const Graph g = planted_partition_graph(30, 0.3, 0.05, 11);
    Fa2Params params;
    params.iterations = 30;
    params.seed = 8;
    params.plotstep = 0;
    const LayoutResult base = run_layout(g, params, std::nullopt, 1);
    if (!bitwise_equal(base.positions, run_layout(g, params, std::nullopt, 1).positions) ||
        !bitwise_equal(base.positions, run_layout(g, params, std::nullopt, 2).positions) ||
        !bitwise_equal(base.positions, run_layout(g, params, std::nullopt, 4).positions)) {
      failing = "determinism";
    }
  }

  // translation equivariance, gravity off
  {
    const Graph g = planted_partition_graph(10, 0.4, 0.1, 5);
    Fa2Params params;
    params.iterations = 100;
    params.plotstep = 0;
    const PositionMatrix start = random_positions(static_cast<Eigen::Index>(g.node_count()), 6);
    const Vec2 shift(137.25, -41.5);
    const LayoutResult base = run_layout(g, params, start);
    const LayoutResult moved = run_layout(g, params, PositionMatrix(start.rowwise() + shift));
    const PositionMatrix expected = base.positions.rowwise() + shift;
    const double scale = std::max(1.0, expected.rowwise().norm().maxCoeff());
    if ((moved.positions - expected).rowwise().norm().maxCoeff() / scale >= 1e-9) {
      failing = "translation equivariance";
    }
  }

  // delta = 0: positive weight rescaling cannot matter
  {
    Graph a(true), b(true);
    for (int i = 0; i < 10; ++i) {
      a.ensure_node("n" + std::to_string(i));
      b.ensure_node("n" + std::to_string(i));
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        if (i != j && unit(rng) < 0.3) {
          const double w = 2.0 * unit(rng);
          a.add_edge(i, j, w);
          b.add_edge(i, j, w * 613.0);
        }
      }
    }
    Fa2Params params;
    params.edge_weight_influence = 0;
    params.iterations = 60;
    params.seed = 14;
    params.plotstep = 0;
    if (!bitwise_equal(run_layout(a, params).positions, run_layout(b, params).positions)) {
      failing = "delta=0 invariance";
    }
  }

  // strong gravity contracts the layout toward the center
  {
    const Graph g = planted_partition_graph(12, 0.4, 0.05, 19);
    Fa2Params params;
    params.iterations = 150;
    params.seed = 31;
    params.plotstep = 0;
    const double off = run_layout(g, params).positions.rowwise().norm().mean();
    params.strong_gravity = true;
    params.gravity_constant = 10.0;
    const double on = run_layout(g, params).positions.rowwise().norm().mean();
    if (!(on < off)) failing = "strong gravity";
  }

  detail = failing.empty() ? "newton / zero-degree / determinism / translation / delta=0 / gravity"
                           : "failed: " + failing;
  return failing.empty();
}

bool criterion_cluster_separation(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  int separated = 0;
  const int block = 20;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = planted_partition_graph(block, 0.5, 0.02, seed);
    Fa2Params params;
    params.iterations = 200;
    params.seed = seed;
    params.plotstep = 0;
    const LayoutResult run = run_layout(g, params, std::nullopt, 0);

    double intra = 0.0, inter = 0.0;
    int intra_count = 0, inter_count = 0;
    for (int i = 0; i < 2 * block; ++i) {
      for (int j = i + 1; j < 2 * block; ++j) {
        const double d = (run.positions.row(i) - run.positions.row(j)).norm();
        if ((i < block) == (j < block)) {
          intra += d;
          ++intra_count;
        } else {
          inter += d;
          ++inter_count;
        }
      }
    }
    if (intra / intra_count < inter / inter_count) ++separated;
  }
  const double elapsed = seconds_since(start);
  std::snprintf(buffer, sizeof(buffer), "%d/100 seeds separated (%.1f s)", separated, elapsed);
  detail = buffer;
  return separated >= 95 && elapsed < 60.0;
}

// Rolling-window stand-in: a 96-node weighted spillover network whose edge
// weights get re-drawn on 2% of edges per period, node set fixed.
Graph weighted_spillover(int n, std::mt19937_64& rng) {
  const double p = 10.0 / (n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  Graph g(false);
  for (int i = 0; i < n; ++i) g.ensure_node("bank" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < p) g.add_edge(i, j, weight(rng));
    }
  }
  return g;
}

Graph redraw_weights(const Graph& base, double fraction, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph next(false);
  for (const auto& node : base.nodes()) next.ensure_node(node.id);
  for (const auto& e : base.edges()) {
    next.add_edge(e.source, e.target, coin(rng) < fraction ? weight(rng) : e.weight);
  }
  return next;
}

bool criterion_time_series_stability(std::string& detail) {
  std::mt19937_64 rng(404);
  std::vector<std::pair<std::string, Graph>> periods;
  Graph current = weighted_spillover(96, rng);
  periods.emplace_back("p1", current);
  for (int k = 2; k <= 10; ++k) {
    current = redraw_weights(current, 0.02, rng);
    periods.emplace_back("p" + std::to_string(k), current);
  }

  Fa2Params params;
  params.iterations = 100;
  params.seed = 70;
  params.plotstep = 0;

  // period 1 starts from a converged base layout (the provided-start path)
  Fa2Params settle = params;
  settle.iterations = 500;
  const PositionMatrix base = run_layout(periods.front().second, settle).positions;

  const TimeSeriesResult chained = run_time_series(periods, params, true, base);
  const TimeSeriesResult fresh = run_time_series(periods, params, false);

  double worst_ratio = 0.0;
  bool always_smaller = true;
  for (std::size_t t = 0; t < chained.transitions.size(); ++t) {
    const auto& c = chained.transitions[t];
    worst_ratio = std::max(worst_ratio, c.mean_displacement / c.prev_diameter);
    if (c.mean_displacement >= fresh.transitions[t].mean_displacement) always_smaller = false;
  }
  std::snprintf(buffer, sizeof(buffer),
                "worst displacement/diameter %.4f (limit 0.05), chained < fresh in all %zu "
                "transitions: %s",
                worst_ratio, chained.transitions.size(), always_smaller ? "yes" : "no");
  detail = buffer;
  return worst_ratio < 0.05 && always_smaller;
}

bool criterion_transform_identities(std::string& detail) {
  std::mt19937_64 rng(55);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const PositionMatrix layout = random_layout(rng, 12);
    const double angle = 31.7 + 13.0 * trial;
    const double factor = 0.3 + 0.45 * trial;

    const PositionMatrix back = rotate_positions(rotate_positions(layout, angle), -angle);
    worst = std::max(worst, (back - layout).rowwise().norm().maxCoeff());
    const PositionMatrix rescaled = scale_positions(scale_positions(layout, factor), 1.0 / factor);
    worst = std::max(worst, (rescaled - layout).rowwise().norm().maxCoeff());

    const PositionMatrix rotated = rotate_positions(layout, angle);
    const PositionMatrix scaled = scale_positions(layout, factor);
    for (Eigen::Index i = 0; i < layout.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < layout.rows(); ++j) {
        const double d = (layout.row(i) - layout.row(j)).norm();
        if (d == 0.0) continue;
        const double dr = (rotated.row(i) - rotated.row(j)).norm();
        const double ds = (scaled.row(i) - scaled.row(j)).norm();
        worst = std::max(worst, std::abs(dr - d) / d);
        worst = std::max(worst, std::abs(ds - factor * d) / (factor * d));
      }
    }
  }
  std::snprintf(buffer, sizeof(buffer), "worst identity/distance error %.2e (limit 1e-9)", worst);
  detail = buffer;
  return worst < 1e-9;
}

bool criterion_renderer_contract(std::string& detail) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_small_graph(rng, 10);
    const auto n = static_cast<Eigen::Index>(g.node_count());
    const PositionMatrix layout = random_layout(rng, n);
    const std::string svg = render_svg(g, layout, {});
    if (!fa2::testing::xml_well_formed(svg)) {
      detail = "trial " + std::to_string(trial) + ": not well-formed XML";
      return false;
    }
    if (fa2::testing::count_elements(svg, "circle") != g.node_count() ||
        fa2::testing::count_elements(svg, "path") != g.edge_count()) {
      detail = "trial " + std::to_string(trial) + ": element counts off";
      return false;
    }
    if (svg != render_svg(g, layout, {})) {
      detail = "trial " + std::to_string(trial) + ": output not byte-stable";
      return false;
    }
  }
  detail = "20 graphs: well-formed, N circles, E paths, byte-stable";
  return true;
}

bool criterion_scaling_law(std::string& detail) {
  const std::vector<int> nodes{250, 500, 1000, 2000};
  const auto results = run_bench(nodes, {100}, 1, 4242, 1);
  const double slope = fitted_loglog_slope(results, 100);
  double t1000 = 0.0;
  for (const auto& r : results) {
    if (r.n_nodes == 1000) t1000 = r.mean_seconds;
  }
  std::snprintf(buffer, sizeof(buffer),
                "loglog slope %.3f (limit [1.7, 2.3]), N=1000 in %.2f s (limit 10 s)", slope,
                t1000);
  detail = buffer;
  return slope >= 1.7 && slope <= 2.3 && t1000 < 10.0;
}

bool criterion_parallel_determinism(std::string& detail) {
  const Graph g = make_benchmark_graph(500, 31337);
  Fa2Params params;
  params.iterations = 50;
  params.seed = 12;
  params.plotstep = 0;

  const std::string tsv1 = format_layout_tsv(g, run_layout(g, params, std::nullopt, 1).positions);
  const std::string tsv2 = format_layout_tsv(g, run_layout(g, params, std::nullopt, 2).positions);
  const std::string tsv4 = format_layout_tsv(g, run_layout(g, params, std::nullopt, 4).positions);
  const bool same = tsv1 == tsv2 && tsv1 == tsv4;
  detail = same ? "N=500 layout TSVs bitwise identical for 1/2/4 workers"
                : "TSVs differ across worker counts";
  return same;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1. two-node equilibrium", criterion_two_node_equilibrium},
      {"2. hand-trace match", criterion_hand_trace},
      {"3. brute-force oracle equivalence", criterion_oracle_equivalence},
      {"4. engine property suite", criterion_property_suite},
      {"5. cluster separation", criterion_cluster_separation},
      {"6. time-series stability", criterion_time_series_stability},
      {"7. transform identities", criterion_transform_identities},
      {"8. renderer contract", criterion_renderer_contract},
      {"9. scaling law", criterion_scaling_law},
      {"10. determinism across parallelism", criterion_parallel_determinism},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", criterion.name.c_str(), detail.c_str());
    if (!ok) ++failed;
  }
  if (failed == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria failed\n", failed, criteria.size());
  return 1;
}
