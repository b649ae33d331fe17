#pragma once

#include <Eigen/Core>

namespace fa2 {

using Scalar = double;

/// Row i holds the (x, y) coordinates of node i, in graph node order.
using PositionMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, 2>;
using ForceMatrix = PositionMatrix;
using VectorN = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Vec2 = Eigen::Matrix<Scalar, 1, 2>;

}  // namespace fa2
