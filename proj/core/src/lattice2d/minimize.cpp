#include "scb/lattice2d/minimize.hpp"

#include <cmath>
#include <string>

#include "scb/errors.hpp"
#include "scb/lattice2d/fe_energy.hpp"

namespace scb::lattice2d {
namespace {

// Removes the mean of the x and y components.
void project_mean(Eigen::VectorXd& v) {
  const Eigen::Index n = v.size() / 2;
  auto xy = Eigen::Map<Eigen::Matrix<double, 2, Eigen::Dynamic>>(v.data(), 2, n);
  const Vec2 mean = xy.rowwise().mean();
  xy.colwise() -= mean;
}

double sup_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

MinimizeResult<Eigen::VectorXd> minimize_2d(const Objective& f, Eigen::VectorXd x,
                                            const NewtonOptions& opts) {
  if (x.size() == 0 || x.size() % 2 != 0) throw DimensionError("positions must be 2D and nonempty");
  const Eigen::Index n = x.size();
  IterationTrace trace;
  EnergyEval cur = f(x, true);
  project_mean(cur.gradient);
  double gnorm = sup_norm(cur.gradient);

  while (gnorm > opts.tol) {
    if (trace.size() >= opts.max_iter) {
      throw SolverError("minimize_2d: no convergence after " + std::to_string(opts.max_iter) +
                            " iterations (|grad| = " + std::to_string(gnorm) + ")",
                        std::move(trace));
    }
    IterationRecord rec;
    rec.iter = trace.size() + 1;

    // Translations are null directions of H; lift them with mu T T^T.
    Eigen::MatrixXd H = std::move(cur.hessian);
    const double mu = H.diagonal().cwiseAbs().mean() + 1.0;
    const double w = mu / static_cast<double>(n / 2);
    for (Eigen::Index i = 0; i < n; i += 2)
      for (Eigen::Index j = 0; j < n; j += 2) {
        H(i, j) += w;
        H(i + 1, j + 1) += w;
      }
    Eigen::LLT<Eigen::MatrixXd> llt(H);
    Eigen::VectorXd d;
    if (llt.info() == Eigen::Success) {
      d = llt.solve(-cur.gradient);
    } else {
      d = -cur.gradient;
      rec.steepest_descent = true;
    }
    project_mean(d);
    const double slope = cur.gradient.dot(d);

    double t = 1.0;
    bool accepted = false;
    EnergyEval next;
    Eigen::VectorXd trial(n);
    for (std::size_t k = 0; k <= opts.max_backtracks; ++k, t *= opts.backtrack) {
      trial = x + t * d;
      try {
        next = f(trial, true);
      } catch (const DomainError&) {
        continue;
      }
      project_mean(next.gradient);
      if (next.energy <= cur.energy + opts.armijo * t * slope + energy_slack(cur.energy)) {
        accepted = true;
        break;
      }
      // Near the minimizer energy differences fall below roundoff; a full
      // Newton step that reduces the gradient is still progress.
      if (k == 0 && !rec.steepest_descent && gnorm < 1e-6 &&
          sup_norm(next.gradient) < 0.5 * gnorm) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw SolverError("minimize_2d: line search failed at iteration " + std::to_string(rec.iter) +
                            " (|grad| = " + std::to_string(gnorm) + ")",
                        std::move(trace));
    }
    x.swap(trial);
    cur = std::move(next);
    gnorm = sup_norm(cur.gradient);
    rec.energy = cur.energy;
    rec.grad_inf = gnorm;
    rec.step = t;
    trace.push_back(rec);
  }
  return {std::move(x), std::move(trace), cur.energy, gnorm};
}

MinimizeResult<DeformationField2D> relax_atomistic(const MorseParams& p, const LatticeStrip2D& strip,
                                                   const DeformationField2D& y0,
                                                   const NewtonOptions& opts) {
  if (y0.size() != strip.size()) throw DimensionError("deformation/strip size mismatch");
  const Vec2 period = y0.period;
  auto r = minimize_2d(
      [&](const Eigen::VectorXd& x, bool need_hessian) {
        return evaluate_atomistic_2d(p, strip, DeformationField2D::from_vector(x, period),
                                     need_hessian);
      },
      y0.to_vector(), opts);
  return {DeformationField2D::from_vector(r.solution, period), std::move(r.trace), r.energy,
          r.grad_inf};
}

MinimizeResult<DeformationField2D> relax_fe(const MorseParams& p, const FEMesh2D& mesh,
                                            const DeformationField2D& y0, bool include_surface,
                                            const NewtonOptions& opts) {
  if (y0.size() != mesh.size()) throw DimensionError("deformation/mesh size mismatch");
  const Vec2 period = y0.period;
  auto r = minimize_2d(
      [&](const Eigen::VectorXd& x, bool need_hessian) {
        return evaluate_scb_2d(p, mesh, DeformationField2D::from_vector(x, period),
                               include_surface, need_hessian);
      },
      y0.to_vector(), opts);
  return {DeformationField2D::from_vector(r.solution, period), std::move(r.trace), r.energy,
          r.grad_inf};
}

}  // namespace scb::lattice2d
