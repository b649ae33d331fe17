#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fa2/graph.hpp"

namespace fa2 {

struct BenchResult {
  int n_nodes = 0;
  int iterations = 0;
  int repetitions = 0;
  double mean_seconds = 0.0;
  double stddev_seconds = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
};

/// Seeded Erdos-Renyi G(n, p) with p = 10/(n-1), i.e. expected mean degree 10.
/// Undirected; unit weights; node ids "n0".."n<n-1>".
Graph make_benchmark_graph(int n, std::uint64_t seed);

/// Times run_layout (layout computation only, no I/O or graph generation)
/// for every (node count, iteration count) pair, `repetitions` runs each.
/// CI95 is mean +- 1.96 * stddev / sqrt(reps); one repetition degenerates to
/// the mean. Runs are strictly sequential.
std::vector<BenchResult> run_bench(const std::vector<int>& node_counts,
                                   const std::vector<int>& iteration_counts, int repetitions,
                                   std::uint64_t seed, int threads = 1);

/// Least-squares slope of log(mean_seconds) against log(n_nodes) across the
/// results matching `iterations`.
double fitted_loglog_slope(const std::vector<BenchResult>& results, int iterations);

/// `n_nodes,iterations,repetitions,mean_seconds,stddev_seconds,ci95_low,ci95_high`.
std::string format_bench_csv(const std::vector<BenchResult>& results);

}  // namespace fa2
