#include "scb/lattice2d/fe_energy.hpp"

#include "scb/errors.hpp"
#include "scb/lattice2d/cauchy_born.hpp"

namespace scb::lattice2d {
namespace {

void check_size(const FEMesh2D& mesh, const DeformationField2D& y) {
  if (y.size() != mesh.size()) throw DimensionError("deformation/mesh size mismatch");
}

// Scatters c * (dE/dF, d2E/dF2) of one triangle into the nodal gradient and Hessian.
void scatter(const FEMesh2D& mesh, std::size_t t, double c, const DensityEval& d,
             EnergyEval& out, bool need_hessian) {
  const auto& tri = mesh.triangles()[t];
  const auto& g = mesh.shape_gradients(t);
  for (int a = 0; a < 3; ++a) {
    const auto ia = static_cast<Eigen::Index>(2 * tri[a].index);
    out.gradient.segment<2>(ia) += c * d.first * g[a];
    if (!need_hessian) continue;
    for (int b = 0; b < 3; ++b) {
      const auto ib = static_cast<Eigen::Index>(2 * tri[b].index);
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
          double s = 0.0;
          for (int J = 0; J < 2; ++J)
            for (int L = 0; L < 2; ++L) s += d.second(2 * i + J, 2 * k + L) * g[a](J) * g[b](L);
          out.hessian(ia + i, ib + k) += c * s;
        }
    }
  }
}

double edge_length(const FEMesh2D& mesh, const BoundaryEdge& e) {
  return (lattice_matrix() * (mesh.lattice(e.b) - mesh.lattice(e.a))).norm();
}

}  // namespace

double energy_scb_2d(const MorseParams& p, const FEMesh2D& mesh, const DeformationField2D& y,
                     bool include_surface) {
  check_size(mesh, y);
  double e = 0.0;
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    e += mesh.area(t) * cb_density_2d(p, mesh.gradient(y, t));
  }
  if (include_surface) {
    for (const BoundaryEdge& b : mesh.boundary_edges()) {
      e += edge_length(mesh, b) * scb_surface_density_2d(p, mesh.gradient(y, b.triangle), b.nu);
    }
  }
  return e;
}

EnergyEval evaluate_scb_2d(const MorseParams& p, const FEMesh2D& mesh, const DeformationField2D& y,
                           bool include_surface, bool need_hessian) {
  check_size(mesh, y);
  const auto n = static_cast<Eigen::Index>(2 * mesh.size());
  EnergyEval out;
  out.gradient = Eigen::VectorXd::Zero(n);
  if (need_hessian) out.hessian = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const DensityEval d = evaluate_cb_2d(p, mesh.gradient(y, t), need_hessian);
    out.energy += mesh.area(t) * d.value;
    scatter(mesh, t, mesh.area(t), d, out, need_hessian);
  }
  if (include_surface) {
    for (const BoundaryEdge& b : mesh.boundary_edges()) {
      const double len = edge_length(mesh, b);
      const DensityEval d = evaluate_surface_2d(p, mesh.gradient(y, b.triangle), b.nu, need_hessian);
      out.energy += len * d.value;
      scatter(mesh, b.triangle, len, d, out, need_hessian);
    }
  }
  return out;
}

}  // namespace scb::lattice2d
