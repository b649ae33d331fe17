#include "fa2/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "fa2/engine.hpp"

namespace fa2 {

Graph make_benchmark_graph(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("benchmark graph needs at least 2 nodes");
  const double p = std::min(1.0, 10.0 / (n - 1));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  Graph graph(false);
  for (int i = 0; i < n; ++i) graph.ensure_node("n" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) < p) graph.add_edge(i, j, 1.0);
    }
  }
  return graph;
}

std::vector<BenchResult> run_bench(const std::vector<int>& node_counts,
                                   const std::vector<int>& iteration_counts, int repetitions,
                                   std::uint64_t seed, int threads) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  using clock = std::chrono::steady_clock;

  std::vector<BenchResult> results;
  for (int iterations : iteration_counts) {
    for (int n : node_counts) {
      const Graph graph = make_benchmark_graph(n, seed);
      Fa2Params params;
      params.iterations = iterations;
      params.seed = seed;
      params.plotstep = 0;

      std::vector<double> seconds;
      seconds.reserve(static_cast<std::size_t>(repetitions));
      for (int rep = 0; rep < repetitions; ++rep) {
        const auto start = clock::now();
        const LayoutResult run = run_layout(graph, params, std::nullopt, threads);
        const auto stop = clock::now();
        if (!run.positions.allFinite()) throw std::runtime_error("benchmark layout diverged");
        seconds.push_back(std::chrono::duration<double>(stop - start).count());
      }

      BenchResult r;
      r.n_nodes = n;
      r.iterations = iterations;
      r.repetitions = repetitions;
      double sum = 0.0;
      for (double s : seconds) sum += s;
      r.mean_seconds = sum / repetitions;
      double sq = 0.0;
      for (double s : seconds) sq += (s - r.mean_seconds) * (s - r.mean_seconds);
      r.stddev_seconds = repetitions > 1 ? std::sqrt(sq / (repetitions - 1)) : 0.0;
      const double half = 1.96 * r.stddev_seconds / std::sqrt(static_cast<double>(repetitions));
      r.ci95_low = r.mean_seconds - half;
      r.ci95_high = r.mean_seconds + half;
      results.push_back(r);
    }
  }
  return results;
}

double fitted_loglog_slope(const std::vector<BenchResult>& results, int iterations) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (const auto& r : results) {
    if (r.iterations != iterations || r.mean_seconds <= 0.0) continue;
    const double x = std::log(static_cast<double>(r.n_nodes));
    const double y = std::log(r.mean_seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) throw std::invalid_argument("slope fit needs at least 2 node counts");
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

std::string format_bench_csv(const std::vector<BenchResult>& results) {
  std::string out =
      "n_nodes,iterations,repetitions,mean_seconds,stddev_seconds,ci95_low,ci95_high\n";
  char buf[220];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.9g,%.9g,%.9g,%.9g\n", r.n_nodes, r.iterations,
                  r.repetitions, r.mean_seconds, r.stddev_seconds, r.ci95_low, r.ci95_high);
    out += buf;
  }
  return out;
}

}  // namespace fa2
