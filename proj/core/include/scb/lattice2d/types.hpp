#pragma once

#include <array>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace scb::lattice2d {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
/// Second derivative with respect to F, indexed by (2 i + J, 2 k + L).
using Mat4 = Eigen::Matrix4d;

/// det A for A = [1 1/2; 0 sqrt(3)/2], the area per atom.
inline constexpr double kCellArea = 0.5 * std::numbers::sqrt3;

/// Columns a1 = (1, 0), a2 = (1/2, sqrt(3)/2).
inline Mat2 lattice_matrix() {
  Mat2 a;
  a << 1.0, 0.5, 0.0, 0.5 * std::numbers::sqrt3;
  return a;
}

/// Reference position of integer lattice coordinates (n1, n2).
inline Vec2 lattice_point(double n1, double n2) {
  return Vec2(n1 + 0.5 * n2, 0.5 * std::numbers::sqrt3 * n2);
}

/// A site in one period plus the number of periods it is translated by.
struct Image {
  std::size_t index = 0;
  int shift = 0;
  friend bool operator==(const Image&, const Image&) = default;
};

/// Positions of the sites of one period; images are positions[i] + shift * period.
struct DeformationField2D {
  std::vector<Vec2> positions;
  Vec2 period = Vec2::Zero();

  Vec2 image(const Image& s) const { return positions[s.index] + s.shift * period; }
  std::size_t size() const noexcept { return positions.size(); }

  /// Flattened (x0, y0, x1, y1, ...).
  Eigen::VectorXd to_vector() const;
  static DeformationField2D from_vector(const Eigen::VectorXd& x, const Vec2& period);
};

/// Energy, gradient and (optionally) Hessian with respect to the flattened
/// positions.
struct EnergyEval {
  double energy = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;  ///< empty unless requested
};

}  // namespace scb::lattice2d
