#pragma once

#include "scb/lattice2d/mesh.hpp"
#include "scb/lattice2d/types.hpp"
#include "scb/potentials.hpp"

namespace scb::lattice2d {

/// E(y_h) = sum_T |T| W(dy_h|T) + sum over surface edges |e| gamma(dy_h|T(e), nu_e).
/// With include_surface = false this is the pure Cauchy-Born energy.
double energy_scb_2d(const MorseParams& p, const FEMesh2D& mesh, const DeformationField2D& y,
                     bool include_surface = true);

/// Energy with gradient and, optionally, the dense Hessian in the flattened
/// nodal positions.
EnergyEval evaluate_scb_2d(const MorseParams& p, const FEMesh2D& mesh, const DeformationField2D& y,
                           bool include_surface, bool need_hessian);

}  // namespace scb::lattice2d
