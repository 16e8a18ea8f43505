#pragma once

#include <functional>

#include "scb/lattice2d/mesh.hpp"
#include "scb/lattice2d/strip.hpp"
#include "scb/lattice2d/types.hpp"
#include "scb/newton.hpp"
#include "scb/potentials.hpp"

namespace scb::lattice2d {

/// Energy (with gradient, and Hessian when requested) of flattened positions.
/// May throw DomainError for states outside the model's domain.
using Objective = std::function<EnergyEval(const Eigen::VectorXd& x, bool need_hessian)>;

/// Options for the 2D solvers; the default tolerance is looser than the
/// 1D one because energies are sums over a few hundred sites.
inline NewtonOptions default_options_2d() {
  NewtonOptions o;
  o.tol = 1e-9;
  o.max_iter = 200;
  return o;
}

/// Damped Newton iteration for a translation-invariant energy of 2D
/// positions. Steps have zero mean, so the mean position of x0 is kept
/// fixed; the Hessian is regularized along the two translations. Falls back
/// to steepest descent when the regularized Hessian is not positive
/// definite, and treats DomainError during the line search as an infeasible
/// trial. Throws SolverError (with trace) on failure.
MinimizeResult<Eigen::VectorXd> minimize_2d(const Objective& f, Eigen::VectorXd x0,
                                            const NewtonOptions& opts = default_options_2d());

MinimizeResult<DeformationField2D> relax_atomistic(const MorseParams& p, const LatticeStrip2D& strip,
                                                   const DeformationField2D& y0,
                                                   const NewtonOptions& opts = default_options_2d());

/// Minimizes the finite element energy; include_surface = false gives the
/// Cauchy-Born model.
MinimizeResult<DeformationField2D> relax_fe(const MorseParams& p, const FEMesh2D& mesh,
                                            const DeformationField2D& y0, bool include_surface,
                                            const NewtonOptions& opts = default_options_2d());

}  // namespace scb::lattice2d
