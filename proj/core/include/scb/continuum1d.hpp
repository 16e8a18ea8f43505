#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scb/newton.hpp"
#include "scb/potentials.hpp"

/// P0 (element-wise constant strain) finite element Cauchy-Born and surface
/// Cauchy-Born energies on a lattice-conforming 1D grid.
namespace scb::continuum {

/// Strictly increasing integer nodes X_0 = 0 < X_1 < ... < X_J.
class Grid1D {
 public:
  /// Throws ConfigError unless nodes start at 0, are strictly increasing and
  /// define at least one element.
  explicit Grid1D(std::vector<std::int64_t> nodes);

  /// (0, h, 2h, ..., length). h must divide length.
  static Grid1D uniform(std::int64_t length, std::int64_t h);
  /// (0, 1, h, 2h, ..., length - h, length - 1, length): atomic spacing at
  /// both free ends. h >= 2 must divide length.
  static Grid1D boundary_layer(std::int64_t length, std::int64_t h);

  std::span<const std::int64_t> nodes() const noexcept { return nodes_; }
  std::size_t elements() const noexcept { return nodes_.size() - 1; }
  double h(std::size_t j) const noexcept { return static_cast<double>(nodes_[j + 1] - nodes_[j]); }
  std::int64_t length() const noexcept { return nodes_.back(); }

 private:
  std::vector<std::int64_t> nodes_;
};

/// Per-element displacement gradients U_j.
using P0Field = std::vector<double>;

enum class SurfaceMode {
  None,      ///< pure Cauchy-Born
  LeftOnly,  ///< gamma(1 + U_0): the semi-infinite chain
  BothEnds,  ///< gamma(1 + U_0) + gamma(1 + U_{J-1}): the finite chain
};

/// sum_j h_j W(1 + U_j)
double energy_cb(const MorseParams& p, const Grid1D& g, std::span<const double> U);

double energy_scb(const MorseParams& p, const Grid1D& g, std::span<const double> U,
                  SurfaceMode mode = SurfaceMode::BothEnds);

std::vector<double> gradient_scb(const MorseParams& p, const Grid1D& g, std::span<const double> U,
                                 SurfaceMode mode = SurfaceMode::BothEnds);

/// The Hessian is diagonal; returns its diagonal.
std::vector<double> hessian_scb(const MorseParams& p, const Grid1D& g, std::span<const double> U,
                                SurfaceMode mode = SurfaceMode::BothEnds);

MinimizeResult<P0Field> minimize_scb(const MorseParams& p, const Grid1D& g, P0Field U0,
                                     const NewtonOptions& opts = {},
                                     SurfaceMode mode = SurfaceMode::BothEnds);

MinimizeResult<P0Field> minimize_cb(const MorseParams& p, const Grid1D& g, P0Field U0,
                                    const NewtonOptions& opts = {});

}  // namespace scb::continuum
