#include "scb/continuum1d.hpp"

#include <algorithm>
#include <cmath>

#include "scb/errors.hpp"

namespace scb::continuum {
namespace {

constexpr double kLineSearchFloor = 0.1;

void check_field(const Grid1D& g, std::span<const double> U) {
  if (U.size() != g.elements()) {
    throw DimensionError("P0 field has " + std::to_string(U.size()) + " values for " +
                         std::to_string(g.elements()) + " elements");
  }
  for (std::size_t j = 0; j < U.size(); ++j) {
    if (!(1.0 + U[j] > 0.0)) {
      throw DomainError("element " + std::to_string(j) + " inverted: 1 + U = " +
                        std::to_string(1.0 + U[j]));
    }
  }
}

template <class F>
void for_each_surface(std::size_t J, SurfaceMode mode, F&& f) {
  if (mode == SurfaceMode::None) return;
  f(std::size_t{0});
  if (mode == SurfaceMode::BothEnds) f(J - 1);
}

}  // namespace

Grid1D::Grid1D(std::vector<std::int64_t> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw ConfigError("grid needs at least two nodes");
  if (nodes_.front() != 0) throw ConfigError("grid must start at X_0 = 0");
  for (std::size_t j = 0; j + 1 < nodes_.size(); ++j) {
    if (nodes_[j + 1] <= nodes_[j]) throw ConfigError("grid nodes must be strictly increasing");
  }
}

Grid1D Grid1D::uniform(std::int64_t length, std::int64_t h) {
  if (h < 1 || length < h || length % h != 0) {
    throw ConfigError("uniform grid: h = " + std::to_string(h) + " must divide length " +
                      std::to_string(length));
  }
  std::vector<std::int64_t> x;
  for (std::int64_t v = 0; v <= length; v += h) x.push_back(v);
  return Grid1D(std::move(x));
}

Grid1D Grid1D::boundary_layer(std::int64_t length, std::int64_t h) {
  if (h < 2 || length < 2 * h || length % h != 0) {
    throw ConfigError("boundary-layer grid: h = " + std::to_string(h) +
                      " must be >= 2 and divide length " + std::to_string(length));
  }
  std::vector<std::int64_t> x{0, 1};
  for (std::int64_t v = h; v <= length - h; v += h) x.push_back(v);
  x.push_back(length - 1);
  x.push_back(length);
  return Grid1D(std::move(x));
}

double energy_cb(const MorseParams& p, const Grid1D& g, std::span<const double> U) {
  check_field(g, U);
  double e = 0.0;
  for (std::size_t j = 0; j < U.size(); ++j) e += g.h(j) * p.W(1.0 + U[j]);
  return e;
}

double energy_scb(const MorseParams& p, const Grid1D& g, std::span<const double> U,
                  SurfaceMode mode) {
  double e = energy_cb(p, g, U);
  for_each_surface(U.size(), mode, [&](std::size_t j) { e += p.gamma(1.0 + U[j]); });
  return e;
}

std::vector<double> gradient_scb(const MorseParams& p, const Grid1D& g, std::span<const double> U,
                                 SurfaceMode mode) {
  check_field(g, U);
  std::vector<double> r(U.size());
  for (std::size_t j = 0; j < U.size(); ++j) r[j] = g.h(j) * p.dW(1.0 + U[j]);
  for_each_surface(U.size(), mode, [&](std::size_t j) { r[j] += p.dgamma(1.0 + U[j]); });
  return r;
}

std::vector<double> hessian_scb(const MorseParams& p, const Grid1D& g, std::span<const double> U,
                                SurfaceMode mode) {
  check_field(g, U);
  std::vector<double> d(U.size());
  for (std::size_t j = 0; j < U.size(); ++j) d[j] = g.h(j) * p.ddW(1.0 + U[j]);
  for_each_surface(U.size(), mode, [&](std::size_t j) { d[j] += p.ddgamma(1.0 + U[j]); });
  return d;
}

MinimizeResult<P0Field> minimize_scb(const MorseParams& p, const Grid1D& g, P0Field U,
                                     const NewtonOptions& opts, SurfaceMode mode) {
  check_field(g, U);
  const std::size_t J = U.size();
  auto sup = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  };

  // The energy is a sum of independent per-element terms, so a step that is
  // a Newton step per element with an element-wise backtracking line search
  // is a descent step for the total energy.
  auto element_energy = [&](std::size_t j, double Uj) {
    double e = g.h(j) * p.W(1.0 + Uj);
    if (mode != SurfaceMode::None && j == 0) e += p.gamma(1.0 + Uj);
    if (mode == SurfaceMode::BothEnds && j == J - 1) e += p.gamma(1.0 + Uj);
    return e;
  };

  IterationTrace trace;
  std::vector<double> r = gradient_scb(p, g, U, mode);
  double gnorm = sup(r);
  while (gnorm > opts.tol) {
    if (trace.size() >= opts.max_iter) {
      throw SolverError("continuum::minimize_scb: no convergence after " +
                            std::to_string(opts.max_iter) + " iterations",
                        std::move(trace));
    }
    IterationRecord rec;
    rec.iter = trace.size() + 1;
    const std::vector<double> hd = hessian_scb(p, g, U, mode);
    bool resolved = true;
    for (std::size_t j = 0; j < J && resolved; ++j)
      resolved = hd[j] > 0.0 && step_resolved(r[j] / hd[j], U[j]);
    if (resolved) break;
    double min_step = 1.0;
    for (std::size_t j = 0; j < J; ++j) {
      if (r[j] == 0.0) continue;
      double d = -r[j];
      if (hd[j] > 0.0) {
        d /= hd[j];
      } else {
        rec.steepest_descent = true;
      }
      const double e0 = element_energy(j, U[j]);
      double t = 1.0;
      bool ok = false;
      for (std::size_t k = 0; k <= opts.max_backtracks; ++k, t *= opts.backtrack) {
        const double trial = U[j] + t * d;
        if (!(1.0 + trial > kLineSearchFloor)) continue;
        if (element_energy(j, trial) <= e0 + opts.armijo * t * r[j] * d + energy_slack(e0)) {
          U[j] = trial;
          ok = true;
          break;
        }
      }
      if (!ok) {
        throw SolverError("continuum::minimize_scb: line search failed on element " +
                              std::to_string(j),
                          std::move(trace));
      }
      min_step = std::min(min_step, t);
    }
    r = gradient_scb(p, g, U, mode);
    gnorm = sup(r);
    rec.energy = energy_scb(p, g, U, mode);
    rec.grad_inf = gnorm;
    rec.step = min_step;
    trace.push_back(rec);
  }
  const double e = energy_scb(p, g, U, mode);
  return {std::move(U), std::move(trace), e, gnorm};
}

MinimizeResult<P0Field> minimize_cb(const MorseParams& p, const Grid1D& g, P0Field U0,
                                    const NewtonOptions& opts) {
  return minimize_scb(p, g, std::move(U0), opts, SurfaceMode::None);
}

}  // namespace scb::continuum
