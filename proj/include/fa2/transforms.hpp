#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include <Eigen/Core>

#include "fa2/types.hpp"

namespace fa2 {

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 1, 2> centroid(const Eigen::MatrixBase<Derived>& layout) {
  if (layout.rows() == 0) throw std::invalid_argument("centroid of an empty layout");
  return layout.colwise().mean();
}

/// Scales every position about the layout centroid; pairwise distances
/// multiply by exactly `factor`.
template <typename Derived>
typename Derived::PlainObject scale_positions(const Eigen::MatrixBase<Derived>& layout,
                                              typename Derived::Scalar factor) {
  if (!(factor > 0)) throw std::invalid_argument("scale factor must be > 0");
  const auto c = centroid(layout);
  typename Derived::PlainObject out = layout;
  out.rowwise() -= c;
  out *= factor;
  out.rowwise() += c;
  return out;
}

/// Counterclockwise rotation by `degrees` about `pivot` (layout centroid when
/// omitted).
template <typename Derived>
typename Derived::PlainObject rotate_positions(
    const Eigen::MatrixBase<Derived>& layout, typename Derived::Scalar degrees,
    std::optional<Eigen::Matrix<typename Derived::Scalar, 1, 2>> pivot = std::nullopt) {
  using Scalar = typename Derived::Scalar;
  const Scalar radians = degrees * static_cast<Scalar>(EIGEN_PI) / static_cast<Scalar>(180);
  const Scalar c = std::cos(radians);
  const Scalar s = std::sin(radians);
  Eigen::Matrix<Scalar, 2, 2> rotation;
  // positions are row vectors, so apply the transpose of the usual matrix
  rotation << c, s, -s, c;
  const auto p = pivot ? *pivot : centroid(layout);
  typename Derived::PlainObject out = layout;
  out.rowwise() -= p;
  out = out * rotation;
  out.rowwise() += p;
  return out;
}

/// Shifts the layout so its centroid lands on `target_center`.
template <typename Derived>
typename Derived::PlainObject translate_to(
    const Eigen::MatrixBase<Derived>& layout,
    const Eigen::Matrix<typename Derived::Scalar, 1, 2>& target_center) {
  typename Derived::PlainObject out = layout;
  out.rowwise() += (target_center - centroid(layout));
  return out;
}

}  // namespace fa2
