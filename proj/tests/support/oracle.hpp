#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "fa2/engine.hpp"
#include "fa2/graph.hpp"

namespace fa2::testing {

// Straightforward double-loop evaluation of the force model. Deliberately
// written against the formulas, not the engine's row-sweep accumulation, so
// agreement between the two is meaningful.
inline ForceMatrix oracle_net_forces(const Graph& g, const PositionMatrix& pos,
                                     const Fa2Params& p) {
  const Eigen::Index n = pos.rows();
  ForceMatrix net = ForceMatrix::Zero(n, 2);

  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const Vec2 delta = pos.row(a) - pos.row(b);
      const double d = delta.norm();
      if (d == 0.0) continue;
      const double mass_a = g.node(static_cast<int>(a)).degree + 1.0;
      const double mass_b = g.node(static_cast<int>(b)).degree + 1.0;
      const double magnitude = p.scaling_s * mass_a * mass_b / std::max(d, 1e-4);
      const Vec2 push = magnitude * (delta / d);
      net.row(a) += push;
      net.row(b) -= push;
    }
  }

  for (const auto& e : g.edges()) {
    if (e.source == e.target) continue;
    const Vec2 delta = pos.row(e.target) - pos.row(e.source);
    const double d = delta.norm();
    if (d == 0.0) continue;
    const double magnitude =
        p.linlog ? std::log1p(d) : (p.edge_weight_influence == 1 ? e.weight : 1.0) * d;
    const Vec2 pull = magnitude * (delta / d);
    net.row(e.source) += pull;
    net.row(e.target) -= pull;
  }

  if (p.strong_gravity) {
    for (Eigen::Index a = 0; a < n; ++a) {
      const Vec2 delta = p.center - pos.row(a);
      const double d = delta.norm();
      if (d == 0.0) continue;
      const double magnitude =
          p.gravity_constant * std::log(g.node(static_cast<int>(a)).degree + 1.0);
      net.row(a) += magnitude * (delta / d);
    }
  }
  return net;
}

/// max over nodes of |a_i - b_i| scaled by the largest force magnitude.
inline double relative_force_error(const ForceMatrix& a, const ForceMatrix& b) {
  const double scale = std::max({1.0, a.rowwise().norm().maxCoeff(), b.rowwise().norm().maxCoeff()});
  return (a - b).rowwise().norm().maxCoeff() / scale;
}

}  // namespace fa2::testing
