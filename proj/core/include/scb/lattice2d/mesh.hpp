#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "scb/lattice2d/types.hpp"

namespace scb::lattice2d {

/// Edge of a triangle lying on a free surface.
struct BoundaryEdge {
  std::size_t triangle = 0;
  Image a;
  Image b;
  Vec2 nu;  ///< outward unit normal, (0, 1) or (0, -1)
};

/// P1 triangulation of one period of the strip Omega = A((0, N1] x (0, N2]),
/// periodic in the a1 direction. Node positions are stored in lattice
/// coordinates (n1, n2) of one period; a triangle vertex may refer to a
/// node translated by a multiple of the period, as in LatticeStrip2D.
class FEMesh2D {
 public:
  /// Validates the triangulation. Throws MeshError for non-positively
  /// oriented triangles or boundary edges that are not on n2 = 0 / n2 = N2
  /// with the matching normal, DimensionError for out-of-range indices.
  FEMesh2D(int n1, int n2, std::vector<Vec2> lattice_nodes,
           std::vector<std::array<Image, 3>> triangles, std::vector<BoundaryEdge> edges);

  int n1() const noexcept { return n1_; }
  int n2() const noexcept { return n2_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t triangle_count() const noexcept { return triangles_.size(); }

  /// Lattice coordinates of a node or an image of a node.
  Vec2 lattice(std::size_t i) const { return nodes_[i]; }
  Vec2 lattice(const Image& s) const { return nodes_[s.index] + Vec2(s.shift * n1_, 0.0); }
  Vec2 reference(std::size_t i) const { return lattice_matrix() * nodes_[i]; }
  Vec2 period() const { return Vec2(n1_, 0.0); }

  std::span<const std::array<Image, 3>> triangles() const noexcept { return triangles_; }
  std::span<const BoundaryEdge> boundary_edges() const noexcept { return edges_; }

  /// Reference area of triangle t.
  double area(std::size_t t) const { return areas_[t]; }
  /// Gradients of the three P1 basis functions of triangle t (reference
  /// coordinates), so that dy = sum_k y_k grad_k^T.
  const std::array<Vec2, 3>& shape_gradients(std::size_t t) const { return grads_[t]; }
  /// Lattice coordinates of the vertices of triangle t.
  std::array<Vec2, 3> triangle_lattice(std::size_t t) const;

  /// Deformation gradient of y on triangle t.
  Mat2 gradient(const DeformationField2D& y, std::size_t t) const;

  DeformationField2D identity() const { return affine(Mat2::Identity()); }
  DeformationField2D affine(const Mat2& F) const;

 private:
  int n1_;
  int n2_;
  std::vector<Vec2> nodes_;
  std::vector<std::array<Image, 3>> triangles_;
  std::vector<BoundaryEdge> edges_;
  std::vector<double> areas_;
  std::vector<std::array<Vec2, 3>> grads_;
};

/// Structured mesh with tangential spacing h and normal node rows
/// {0, h, ..., N2} (uniform) or {0, 1, h, ..., N2 - h, N2 - 1, N2}
/// (boundary_layer). Every cell is split along its a2 - a1 diagonal, as in
/// the lattice's own triangulation. Throws ConfigError unless h divides N1
/// and N2, and h >= 2 for the layered family.
FEMesh2D build_mesh(int n1, int n2, int h, bool boundary_layer);

/// Text dump: "node <id> <n1> <n2> <x> <y>", "tri <i> <si> <j> <sj> <k> <sk>"
/// and "edge <tri> <nu_x> <nu_y>" records.
void write_mesh(std::ostream& os, const FEMesh2D& mesh);

}  // namespace scb::lattice2d
