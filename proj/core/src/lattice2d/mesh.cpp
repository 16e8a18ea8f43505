#include "scb/lattice2d/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "scb/errors.hpp"

namespace scb::lattice2d {
namespace {

bool shares(const std::array<Image, 3>& tri, const Image& v) {
  return tri[0] == v || tri[1] == v || tri[2] == v;
}

}  // namespace

FEMesh2D::FEMesh2D(int n1, int n2, std::vector<Vec2> lattice_nodes,
                   std::vector<std::array<Image, 3>> triangles, std::vector<BoundaryEdge> edges)
    : n1_(n1), n2_(n2), nodes_(std::move(lattice_nodes)), triangles_(std::move(triangles)),
      edges_(std::move(edges)) {
  if (n1_ <= 0 || n2_ <= 0) throw ConfigError("mesh period and height must be positive");
  const Mat2 A = lattice_matrix();
  areas_.reserve(triangles_.size());
  grads_.reserve(triangles_.size());
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    for (const Image& v : triangles_[t]) {
      if (v.index >= nodes_.size()) {
        throw DimensionError("triangle " + std::to_string(t) + " refers to missing node");
      }
    }
    const auto x = triangle_lattice(t);
    Mat2 D;
    D.col(0) = A * (x[1] - x[0]);
    D.col(1) = A * (x[2] - x[0]);
    const double det = D.determinant();
    if (!(det > 1e-12)) {
      throw MeshError("triangle " + std::to_string(t) + " is degenerate or negatively oriented");
    }
    areas_.push_back(0.5 * det);
    const Mat2 Dinv = D.inverse();
    const Vec2 g1 = Dinv.row(0).transpose(), g2 = Dinv.row(1).transpose();
    grads_.push_back({-(g1 + g2), g1, g2});
  }
  for (const BoundaryEdge& e : edges_) {
    if (e.triangle >= triangles_.size() || !shares(triangles_[e.triangle], e.a) ||
        !shares(triangles_[e.triangle], e.b)) {
      throw MeshError("boundary edge not on its triangle");
    }
    const double ra = lattice(e.a).y(), rb = lattice(e.b).y();
    const bool bottom = ra == 0.0 && rb == 0.0 && e.nu == Vec2(0.0, -1.0);
    const bool top = ra == n2_ && rb == n2_ && e.nu == Vec2(0.0, 1.0);
    if (!bottom && !top) throw MeshError("boundary edge is not on a free surface");
  }
}

std::array<Vec2, 3> FEMesh2D::triangle_lattice(std::size_t t) const {
  const auto& tri = triangles_[t];
  return {lattice(tri[0]), lattice(tri[1]), lattice(tri[2])};
}

Mat2 FEMesh2D::gradient(const DeformationField2D& y, std::size_t t) const {
  const auto& tri = triangles_[t];
  const auto& g = grads_[t];
  Mat2 F = Mat2::Zero();
  for (int k = 0; k < 3; ++k) F += y.image(tri[k]) * g[k].transpose();
  return F;
}

DeformationField2D FEMesh2D::affine(const Mat2& F) const {
  DeformationField2D y;
  y.period = F * period();
  y.positions.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) y.positions.push_back(F * reference(i));
  return y;
}

FEMesh2D build_mesh(int n1, int n2, int h, bool boundary_layer) {
  if (h < 1 || n1 % h != 0 || n2 % h != 0) {
    throw ConfigError("mesh size h = " + std::to_string(h) + " must divide N1 = " +
                      std::to_string(n1) + " and N2 = " + std::to_string(n2));
  }
  if (boundary_layer && h < 2) throw ConfigError("boundary layer mesh needs h >= 2");
  if (n1 / h < 1) throw ConfigError("mesh needs at least one column");

  std::vector<int> rows;
  for (int r = 0; r <= n2; r += h) rows.push_back(r);
  if (boundary_layer) {
    rows.insert(rows.begin() + 1, 1);
    rows.insert(rows.end() - 1, n2 - 1);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  }
  const int m1 = n1 / h;
  const int m2 = static_cast<int>(rows.size()) - 1;

  std::vector<Vec2> nodes;
  for (int r = 0; r <= m2; ++r)
    for (int c = 0; c < m1; ++c) nodes.emplace_back(c * h, rows[r]);

  auto node = [&](int c, int r) {
    const int k = c >= m1 ? 1 : 0;
    return Image{static_cast<std::size_t>(r * m1 + c - k * m1), k};
  };
  std::vector<std::array<Image, 3>> tris;
  std::vector<BoundaryEdge> edges;
  for (int r = 0; r < m2; ++r) {
    for (int c = 0; c < m1; ++c) {
      const Image v00 = node(c, r), v10 = node(c + 1, r), v01 = node(c, r + 1),
                  v11 = node(c + 1, r + 1);
      tris.push_back({v00, v10, v01});
      if (r == 0) edges.push_back({tris.size() - 1, v00, v10, Vec2(0.0, -1.0)});
      tris.push_back({v10, v11, v01});
      if (r == m2 - 1) edges.push_back({tris.size() - 1, v01, v11, Vec2(0.0, 1.0)});
    }
  }
  return FEMesh2D(n1, n2, std::move(nodes), std::move(tris), std::move(edges));
}

void write_mesh(std::ostream& os, const FEMesh2D& mesh) {
  os << "# mesh N1=" << mesh.n1() << " N2=" << mesh.n2() << " nodes=" << mesh.size()
     << " triangles=" << mesh.triangle_count() << " edges=" << mesh.boundary_edges().size()
     << '\n';
  os.precision(17);
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const Vec2 l = mesh.lattice(i), x = mesh.reference(i);
    os << "node " << i << ' ' << l.x() << ' ' << l.y() << ' ' << x.x() << ' ' << x.y() << '\n';
  }
  for (const auto& tri : mesh.triangles()) {
    os << "tri";
    for (const Image& v : tri) os << ' ' << v.index << ' ' << v.shift;
    os << '\n';
  }
  for (const BoundaryEdge& e : mesh.boundary_edges()) {
    os << "edge " << e.triangle << ' ' << e.nu.x() << ' ' << e.nu.y() << '\n';
  }
}

}  // namespace scb::lattice2d
