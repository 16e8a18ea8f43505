#pragma once

#include "scb/lattice2d/mesh.hpp"
#include "scb/lattice2d/strip.hpp"
#include "scb/lattice2d/types.hpp"

namespace scb::lattice2d {

/// Errors of the SCB strain against the atomistic strain, relative to the
/// CB strain error. Strains are compared as piecewise constant fields on
/// the common refinement of the lattice's micro-triangulation and the mesh.
struct Error2D {
  double err_2 = 0.0;        ///< L2 norm ratio
  double err_1 = 0.0;        ///< L1 norm ratio
  double err_inf = 0.0;      ///< Linf norm ratio
  double err_mean = 0.0;     ///< Frobenius norm ratio of the integrated strain errors
  double err_mean_22 = 0.0;  ///< ratio of the normal-normal components (NaN if undefined)
  Mat2 mean_scb = Mat2::Zero();  ///< integral of dy_scb - dy_a
  Mat2 mean_cb = Mat2::Zero();   ///< integral of dy_cb - dy_a
};

/// Area of the intersection of two triangles given by positively oriented
/// vertices in the plane.
double triangle_overlap(const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b);

/// Deformation gradient of the atomistic field on micro-triangle k of the strip.
Mat2 micro_gradient(const LatticeStrip2D& strip, const DeformationField2D& y, std::size_t k);

/// y_scb and y_cb live on mesh, y_a on strip. Throws DimensionError when
/// sizes or the strip/mesh geometry disagree, DomainError when the CB error
/// vanishes.
Error2D err2d(const DeformationField2D& y_scb, const DeformationField2D& y_cb,
              const DeformationField2D& y_a, const LatticeStrip2D& strip, const FEMesh2D& mesh);

}  // namespace scb::lattice2d
