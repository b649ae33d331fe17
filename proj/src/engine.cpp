#include "fa2/engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace fa2 {

namespace {

constexpr double kMinDistance = 1e-4;  // repulsion denominator clamp

int resolve_threads(int threads, Eigen::Index n) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  return static_cast<int>(std::min<Eigen::Index>(threads, std::max<Eigen::Index>(n, 1)));
}

// Runs fn(row_begin, row_end) over a partition of [0, n). Each row is written
// by exactly one worker and every per-row sum uses a fixed accumulation
// order, so the partition cannot change the result bits.
template <typename Fn>
void for_row_chunks(Eigen::Index n, int threads, Fn&& fn) {
  threads = resolve_threads(threads, n);
  if (threads == 1) {
    fn(Eigen::Index{0}, n);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  const Eigen::Index chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const Eigen::Index begin = std::min<Eigen::Index>(t * chunk, n);
    const Eigen::Index end = std::min<Eigen::Index>(begin + chunk, n);
    if (begin == end) break;
    workers.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& w : workers) w.join();
}

// Per-node incidence list in edge-insertion order (self-loops excluded).
struct Adjacency {
  std::vector<int> offsets;
  std::vector<std::pair<int, double>> neighbors;
};

Adjacency build_adjacency(const Graph& graph) {
  const auto n = static_cast<int>(graph.node_count());
  Adjacency adj;
  adj.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : graph.edges()) {
    if (e.source == e.target) continue;
    ++adj.offsets[static_cast<std::size_t>(e.source) + 1];
    ++adj.offsets[static_cast<std::size_t>(e.target) + 1];
  }
  for (int i = 0; i < n; ++i) adj.offsets[i + 1] += adj.offsets[i];
  adj.neighbors.resize(static_cast<std::size_t>(adj.offsets[n]));
  std::vector<int> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const auto& e : graph.edges()) {
    if (e.source == e.target) continue;
    adj.neighbors[static_cast<std::size_t>(cursor[e.source]++)] = {e.target, e.weight};
    adj.neighbors[static_cast<std::size_t>(cursor[e.target]++)] = {e.source, e.weight};
  }
  return adj;
}

VectorN degree_vector(const Graph& graph) {
  VectorN deg(graph.node_count());
  for (Eigen::Index i = 0; i < deg.size(); ++i) {
    deg[i] = graph.node(static_cast<int>(i)).degree;
  }
  return deg;
}

double uniform_from_bits(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

// Reused across iterations so the inner loops stay allocation-free.
struct EngineContext {
  Adjacency adjacency;
  VectorN degrees;
  VectorN masses;  // deg + 1

  explicit EngineContext(const Graph& graph)
      : adjacency(build_adjacency(graph)),
        degrees(degree_vector(graph)),
        masses(degrees.array() + 1.0) {}
};

void repulsion_into(const EngineContext& ctx, const PositionMatrix& pos, double scaling_s,
                    int threads, ForceMatrix& out) {
  const Eigen::Index n = pos.rows();
  out.resize(n, 2);
  const double* xs = pos.col(0).data();
  const double* ys = pos.col(1).data();
  const double* mass = ctx.masses.data();
  double* fx = out.col(0).data();
  double* fy = out.col(1).data();
  for_row_chunks(n, threads, [&](Eigen::Index begin, Eigen::Index end) {
    for (Eigen::Index i = begin; i < end; ++i) {
      const double xi = xs[i], yi = ys[i];
      const double mi = scaling_s * mass[i];
      double sx = 0.0, sy = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        const double dx = xi - xs[j];
        const double dy = yi - ys[j];
        const double d2 = dx * dx + dy * dy;
        if (d2 == 0.0) continue;  // superposed pair: no defined direction
        const double d = std::sqrt(d2);
        const double denom = d < kMinDistance ? kMinDistance : d;
        const double coef = mi * mass[j] / (denom * d);
        sx += coef * dx;
        sy += coef * dy;
      }
      fx[i] = sx;
      fy[i] = sy;
    }
  });
}

void attraction_into(const EngineContext& ctx, const PositionMatrix& pos, int delta, bool linlog,
                     int threads, ForceMatrix& out) {
  const Eigen::Index n = pos.rows();
  out.resize(n, 2);
  const double* xs = pos.col(0).data();
  const double* ys = pos.col(1).data();
  double* fx = out.col(0).data();
  double* fy = out.col(1).data();
  const auto& offsets = ctx.adjacency.offsets;
  const auto& neighbors = ctx.adjacency.neighbors;
  for_row_chunks(n, threads, [&](Eigen::Index begin, Eigen::Index end) {
    for (Eigen::Index i = begin; i < end; ++i) {
      double sx = 0.0, sy = 0.0;
      for (int k = offsets[i]; k < offsets[i + 1]; ++k) {
        const auto [j, w] = neighbors[static_cast<std::size_t>(k)];
        const double dx = xs[j] - xs[i];
        const double dy = ys[j] - ys[i];
        double coef;
        if (linlog) {
          const double d2 = dx * dx + dy * dy;
          if (d2 == 0.0) continue;  // log(1+0) = 0
          const double d = std::sqrt(d2);
          coef = std::log1p(d) / d;
        } else {
          // magnitude w^delta * d along (dx,dy)/d collapses to w^delta * (dx,dy)
          coef = delta == 1 ? w : 1.0;
        }
        sx += coef * dx;
        sy += coef * dy;
      }
      fx[i] = sx;
      fy[i] = sy;
    }
  });
}

void gravity_into(const EngineContext& ctx, const PositionMatrix& pos, double gravity_constant,
                  const Vec2& center, bool enabled, int threads, ForceMatrix& out) {
  const Eigen::Index n = pos.rows();
  out.resize(n, 2);
  if (!enabled) {
    out.setZero();
    return;
  }
  const double* xs = pos.col(0).data();
  const double* ys = pos.col(1).data();
  const double* deg = ctx.degrees.data();
  const double cx = center[0], cy = center[1];
  double* fx = out.col(0).data();
  double* fy = out.col(1).data();
  for_row_chunks(n, threads, [&](Eigen::Index begin, Eigen::Index end) {
    for (Eigen::Index i = begin; i < end; ++i) {
      const double dx = cx - xs[i];
      const double dy = cy - ys[i];
      const double d2 = dx * dx + dy * dy;
      if (d2 == 0.0) {
        fx[i] = 0.0;
        fy[i] = 0.0;
        continue;
      }
      const double coef = gravity_constant * std::log(deg[i] + 1.0) / std::sqrt(d2);
      fx[i] = coef * dx;
      fy[i] = coef * dy;
    }
  });
}

ForceField compute_forces_impl(const EngineContext& ctx, const PositionMatrix& positions,
                               const Fa2Params& params, int threads) {
  ForceField field;
  repulsion_into(ctx, positions, params.scaling_s, threads, field.repulsion);
  attraction_into(ctx, positions, params.edge_weight_influence, params.linlog, threads,
                  field.attraction);
  gravity_into(ctx, positions, params.gravity_constant, params.center, params.strong_gravity,
               threads, field.gravity);
  field.net = field.repulsion + field.attraction + field.gravity;
  return field;
}

IterationDiagnostics step_impl(const EngineContext& ctx, LayoutState& state,
                               const Fa2Params& params, int threads) {
  const ForceField field = compute_forces_impl(ctx, state.positions, params, threads);
  auto [swg, tra] = swinging_and_traction(field.net, state.prev_forces);
  const GlobalSpeedResult gs = global_speed(swg, tra, ctx.degrees, params.tolerance,
                                            params.adaptive_tolerance, state.prev_global_speed);
  VectorN speeds = local_speeds(gs.speed, swg, params.speed_constant);

  try {
    state.positions = apply_displacement(state.positions, field.net, speeds);
  } catch (const std::exception& e) {
    throw std::runtime_error("iteration " + std::to_string(state.iteration_index + 1) + ": " +
                             e.what());
  }
  state.prev_forces = field.net;
  state.prev_global_speed = gs.speed;
  state.iteration_index += 1;

  IterationDiagnostics diag;
  diag.swinging = std::move(swg);
  diag.traction = std::move(tra);
  diag.local_speeds = std::move(speeds);
  diag.global_swinging = gs.global_swinging;
  diag.global_traction = gs.global_traction;
  diag.global_speed = gs.speed;
  diag.effective_tolerance = gs.effective_tolerance;
  return diag;
}

}  // namespace

void Fa2Params::validate() const {
  if (!(scaling_s > 0.0)) throw std::invalid_argument("scaling_s must be > 0");
  if (edge_weight_influence != 0 && edge_weight_influence != 1) {
    throw std::invalid_argument("edge_weight_influence must be 0 or 1");
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  if (!(speed_constant > 0.0)) throw std::invalid_argument("speed_constant must be > 0");
  if (gravity_constant < 0.0) throw std::invalid_argument("gravity_constant must be >= 0");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (plotstep < 0) throw std::invalid_argument("plotstep must be >= 0");
}

PositionMatrix random_positions(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PositionMatrix pos(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    pos(i, 0) = -500.0 + 1000.0 * uniform_from_bits(rng());
    pos(i, 1) = -500.0 + 1000.0 * uniform_from_bits(rng());
  }
  return pos;
}

PositionMatrix init_positions(Eigen::Index n, std::optional<std::uint64_t> seed,
                              const std::optional<PositionMatrix>& warm_start) {
  if (warm_start) {
    if (warm_start->rows() != n) {
      throw std::invalid_argument("warm start: expected " + std::to_string(n) + " rows, got " +
                                  std::to_string(warm_start->rows()));
    }
    if (!warm_start->allFinite()) {
      throw std::invalid_argument("warm start: positions must be finite");
    }
    return *warm_start;
  }
  if (!seed) seed = std::random_device{}();
  return random_positions(n, *seed);
}

ForceMatrix repulsion_forces(const Graph& graph, const PositionMatrix& positions, double scaling_s,
                             int threads) {
  EngineContext ctx(graph);
  ForceMatrix out;
  repulsion_into(ctx, positions, scaling_s, threads, out);
  return out;
}

ForceMatrix attraction_forces(const Graph& graph, const PositionMatrix& positions,
                              int edge_weight_influence, bool linlog, int threads) {
  EngineContext ctx(graph);
  ForceMatrix out;
  attraction_into(ctx, positions, edge_weight_influence, linlog, threads, out);
  return out;
}

ForceMatrix gravity_forces(const Graph& graph, const PositionMatrix& positions,
                           double gravity_constant, const Vec2& center, bool enabled,
                           int threads) {
  EngineContext ctx(graph);
  ForceMatrix out;
  gravity_into(ctx, positions, gravity_constant, center, enabled, threads, out);
  return out;
}

ForceField compute_forces(const Graph& graph, const PositionMatrix& positions,
                          const Fa2Params& params, int threads) {
  EngineContext ctx(graph);
  return compute_forces_impl(ctx, positions, params, threads);
}

std::pair<VectorN, VectorN> swinging_and_traction(const ForceMatrix& net,
                                                  const ForceMatrix& prev_net) {
  if (net.rows() != prev_net.rows()) {
    throw std::invalid_argument("swinging_and_traction: dimension mismatch");
  }
  VectorN swg = (net - prev_net).rowwise().norm();
  VectorN tra = 0.5 * (net + prev_net).rowwise().norm();
  return {std::move(swg), std::move(tra)};
}

GlobalSpeedResult global_speed(const VectorN& swinging, const VectorN& traction,
                               const VectorN& degrees, double tolerance, bool adaptive,
                               double prev_global_speed) {
  const VectorN weights = degrees.array() + 1.0;
  GlobalSpeedResult result;
  result.global_swinging = weights.dot(swinging);
  result.global_traction = weights.dot(traction);

  const auto n = static_cast<double>(swinging.size());
  result.effective_tolerance = tolerance;
  if (adaptive) {
    const double density = 0.05 * std::sqrt(n) * result.global_traction / (n * n);
    result.effective_tolerance = tolerance * std::clamp(density, 0.05, 10.0);
  }

  if (result.global_swinging == 0.0) {
    result.speed = result.effective_tolerance * 10.0;
    if (prev_global_speed > 0.0) result.speed = std::min(result.speed, 1.5 * prev_global_speed);
    return result;
  }
  result.speed = result.effective_tolerance * result.global_traction / result.global_swinging;
  if (adaptive && prev_global_speed > 0.0) {
    result.speed = std::min(result.speed, 1.5 * prev_global_speed);
  }
  return result;
}

VectorN local_speeds(double global_speed, const VectorN& swinging, double speed_constant) {
  return (speed_constant * global_speed / (1.0 + global_speed * swinging.array().sqrt())).matrix();
}

PositionMatrix apply_displacement(const PositionMatrix& positions, const ForceMatrix& net,
                                  const VectorN& speeds) {
  if (positions.rows() != net.rows() || positions.rows() != speeds.size()) {
    throw std::invalid_argument("apply_displacement: dimension mismatch");
  }
  PositionMatrix next = positions;
  next.array() += net.array().colwise() * speeds.array();
  if (!next.allFinite()) {
    for (Eigen::Index i = 0; i < next.rows(); ++i) {
      if (!next.row(i).allFinite()) {
        throw std::runtime_error("non-finite position for node row " + std::to_string(i));
      }
    }
  }
  return next;
}

IterationDiagnostics step_layout(const Graph& graph, LayoutState& state, const Fa2Params& params,
                                 int threads) {
  EngineContext ctx(graph);
  return step_impl(ctx, state, params, threads);
}

LayoutResult run_layout(const Graph& graph, const Fa2Params& params,
                        const std::optional<PositionMatrix>& warm_start, int threads) {
  params.validate();
  if (graph.empty()) throw std::invalid_argument("run_layout: graph has no nodes");

  const auto n = static_cast<Eigen::Index>(graph.node_count());
  EngineContext ctx(graph);
  LayoutState state;
  state.positions = init_positions(n, params.seed, warm_start);
  state.prev_forces = ForceMatrix::Zero(n, 2);

  LayoutResult result;
  result.trace.reserve(static_cast<std::size_t>(params.iterations));
  for (int r = 1; r <= params.iterations; ++r) {
    result.trace.push_back(step_impl(ctx, state, params, threads));
    if (params.plotstep > 0 && r % params.plotstep == 0) {
      result.snapshots.emplace_back(r, state.positions);
    }
  }
  result.positions = std::move(state.positions);
  return result;
}

}  // namespace fa2
