#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fa2/graph.hpp"
#include "fa2/types.hpp"

namespace fa2 {

/// Solver tunables. Defaults mirror the stock ForceAtlas2 parameterization.
struct Fa2Params {
  double scaling_s = 10.0;        // repulsion constant S
  int edge_weight_influence = 1;  // delta, exactly 0 or 1
  double tolerance = 1.0;         // swinging tolerance tau (jittertol)
  double speed_constant = 1.0;    // k_s
  double gravity_constant = 1.0;  // k_g, active only with strong_gravity
  bool linlog = false;
  bool strong_gravity = false;
  int iterations = 100;
  std::optional<std::uint64_t> seed;
  Vec2 center{0.0, 0.0};          // gravity attraction point
  int plotstep = 10;              // snapshot stride; 0 disables snapshots
  bool adaptive_tolerance = true; // false = fixed-tau mode, reproducible by hand

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// Evolving state of one layout run.
struct LayoutState {
  PositionMatrix positions;
  ForceMatrix prev_forces;        // net force per node from the previous iteration
  double prev_global_speed = 0.0;
  int iteration_index = 0;
};

/// Per-node force decomposition for one configuration; net is the
/// elementwise sum of the three components.
struct ForceField {
  ForceMatrix repulsion;
  ForceMatrix attraction;
  ForceMatrix gravity;
  ForceMatrix net;
};

struct IterationDiagnostics {
  VectorN swinging;       // swg(n)
  VectorN traction;       // tra(n)
  VectorN local_speeds;   // s(n)
  double global_swinging = 0.0;
  double global_traction = 0.0;
  double global_speed = 0.0;
  double effective_tolerance = 0.0;
};

struct GlobalSpeedResult {
  double speed = 0.0;
  double effective_tolerance = 0.0;
  double global_swinging = 0.0;
  double global_traction = 0.0;
};

struct LayoutResult {
  PositionMatrix positions;
  std::vector<IterationDiagnostics> trace;
  std::vector<std::pair<int, PositionMatrix>> snapshots;  // (iteration, positions)
};

/// Uniform random positions on [-500, 500]^2. mt19937_64 seeded with `seed`;
/// each coordinate is -500 + 1000 * ((draw >> 11) * 2^-53), x then y per node.
PositionMatrix random_positions(Eigen::Index n, std::uint64_t seed);

/// Returns warm_start verbatim when given (after a row-count check), random
/// positions otherwise. Without a seed, one is drawn from std::random_device.
PositionMatrix init_positions(Eigen::Index n, std::optional<std::uint64_t> seed,
                              const std::optional<PositionMatrix>& warm_start = std::nullopt);

// Force kernels. All of them accumulate per node row in a fixed order, so
// results are bitwise independent of `threads`. threads == 0 means hardware
// concurrency.

/// Pairwise repulsion S*(deg+1)(deg+1)/d over every node pair, pushing apart.
/// Distances below 1e-4 are clamped in the denominator; exactly superposed
/// pairs contribute nothing (no defined direction).
ForceMatrix repulsion_forces(const Graph& graph, const PositionMatrix& positions,
                             double scaling_s, int threads = 1);

/// Per-edge attraction pulling endpoints together: w^delta * d in base mode,
/// log(1+d) in linlog mode (weight ignored). Self-loops contribute nothing.
ForceMatrix attraction_forces(const Graph& graph, const PositionMatrix& positions,
                              int edge_weight_influence, bool linlog, int threads = 1);

/// Distance-independent pull of magnitude k_g*log(deg+1) toward `center`.
/// Returns zeros when disabled; a node exactly at the center gets a zero vector.
ForceMatrix gravity_forces(const Graph& graph, const PositionMatrix& positions,
                           double gravity_constant, const Vec2& center, bool enabled,
                           int threads = 1);

ForceField compute_forces(const Graph& graph, const PositionMatrix& positions,
                          const Fa2Params& params, int threads = 1);

/// swg(n) = |F_t(n) - F_{t-1}(n)|, tra(n) = |F_t(n) + F_{t-1}(n)| / 2.
std::pair<VectorN, VectorN> swinging_and_traction(const ForceMatrix& net,
                                                  const ForceMatrix& prev_net);

/// Global speed s(G) = tau_eff * tra(G) / swg(G), with (deg+1)-weighted global
/// sums. Fixed mode keeps tau_eff = tolerance; adaptive mode sets
/// tau_eff = tolerance * clamp(0.05*sqrt(N)*tra(G)/N^2, 0.05, 10) and caps
/// growth at 1.5x the previous global speed. swg(G) == 0 falls back to
/// min(tau_eff*10, 1.5*prev) to keep the speed bounded.
GlobalSpeedResult global_speed(const VectorN& swinging, const VectorN& traction,
                               const VectorN& degrees, double tolerance, bool adaptive,
                               double prev_global_speed);

/// s(n) = k_s * s(G) / (1 + s(G) * sqrt(swg(n))).
VectorN local_speeds(double global_speed, const VectorN& swinging, double speed_constant);

/// p(n) += s(n) * F(n). Throws naming the first node whose position
/// turns non-finite.
PositionMatrix apply_displacement(const PositionMatrix& positions, const ForceMatrix& net,
                                  const VectorN& speeds);

/// One full iteration: forces -> swinging/traction -> speeds -> displacement.
/// Mutates `state` and returns the iteration's diagnostics.
IterationDiagnostics step_layout(const Graph& graph, LayoutState& state, const Fa2Params& params,
                                 int threads = 1);

/// Runs `params.iterations` rounds from the warm start (or seeded random
/// positions), collecting diagnostics per iteration and position snapshots
/// every `plotstep` iterations. Identical inputs give bit-identical output
/// for any thread count.
LayoutResult run_layout(const Graph& graph, const Fa2Params& params,
                        const std::optional<PositionMatrix>& warm_start = std::nullopt,
                        int threads = 1);

}  // namespace fa2
