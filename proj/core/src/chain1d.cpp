#include "scb/chain1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scb/errors.hpp"

namespace scb::chain {
namespace {

constexpr double kLineSearchBondFloor = 0.1;

void check_bonds(std::span<const double> u, double floor) {
  if (u.size() < 2) throw DimensionError("chain needs at least 2 bonds");
  for (std::size_t l = 0; l < u.size(); ++l) {
    if (!(1.0 + u[l] > floor)) {
      throw DomainError("bond " + std::to_string(l) + " inverted: 1 + u = " +
                        std::to_string(1.0 + u[l]));
    }
  }
}

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool feasible(std::span<const double> u) {
  return std::all_of(u.begin(), u.end(), [](double x) { return 1.0 + x > kLineSearchBondFloor; });
}

}  // namespace

double energy(const MorseParams& p, std::span<const double> u) {
  check_bonds(u, 0.0);
  const std::size_t n = u.size();
  double e = 0.0;
  for (std::size_t l = 0; l < n; ++l) e += p.phi(1.0 + u[l]);
  for (std::size_t l = 0; l + 1 < n; ++l) e += p.phi(2.0 + u[l] + u[l + 1]);
  return e;
}

std::vector<double> gradient(const MorseParams& p, std::span<const double> u) {
  check_bonds(u, 0.0);
  const std::size_t n = u.size();
  std::vector<double> g(n);
  for (std::size_t l = 0; l < n; ++l) g[l] = p.dphi(1.0 + u[l]);
  for (std::size_t l = 0; l + 1 < n; ++l) {
    const double d = p.dphi(2.0 + u[l] + u[l + 1]);
    g[l] += d;
    g[l + 1] += d;
  }
  return g;
}

SymTridiagonal hessian(const MorseParams& p, std::span<const double> u) {
  check_bonds(u, 0.0);
  const std::size_t n = u.size();
  SymTridiagonal h{std::vector<double>(n), std::vector<double>(n - 1)};
  for (std::size_t l = 0; l < n; ++l) h.diag[l] = p.ddphi(1.0 + u[l]);
  for (std::size_t l = 0; l + 1 < n; ++l) {
    const double d = p.ddphi(2.0 + u[l] + u[l + 1]);
    h.diag[l] += d;
    h.diag[l + 1] += d;
    h.off[l] = d;
  }
  return h;
}

StrainField solve_linearized(const MorseParams& p, std::size_t n) {
  if (n < 10) throw DimensionError("solve_linearized needs n >= 10 bonds");
  if (p.calibration() != Calibration::Paper) {
    throw DomainError("solve_linearized requires the paper calibration (W'(1) = 0)");
  }
  std::vector<double> rhs(n, 0.0);
  rhs.front() = p.dphi(2.0);
  rhs.back() = p.dphi(2.0);
  return solve_linearized(p, rhs);
}

StrainField solve_linearized(const MorseParams& p, std::span<const double> rhs) {
  const std::vector<double> zero(rhs.size(), 0.0);
  auto u = solve_spd(hessian(p, zero), rhs);
  if (!u) throw DomainError("linearized atomistic operator is not positive definite");
  return *u;
}

MinimizeResult<StrainField> minimize(const MorseParams& p, StrainField u,
                                     const NewtonOptions& opts) {
  check_bonds(u, 0.0);
  const std::size_t n = u.size();
  IterationTrace trace;
  double e = energy(p, u);
  std::vector<double> g = gradient(p, u);
  double gnorm = sup_norm(g);

  while (gnorm > opts.tol) {
    if (trace.size() >= opts.max_iter) {
      throw SolverError("chain::minimize: no convergence after " + std::to_string(opts.max_iter) +
                            " iterations (|grad| = " + std::to_string(gnorm) + ")",
                        std::move(trace));
    }
    IterationRecord rec;
    rec.iter = trace.size() + 1;

    std::vector<double> d(n);
    const std::vector<double> minus_g = [&] {
      std::vector<double> v(g);
      for (double& x : v) x = -x;
      return v;
    }();
    if (auto newton = solve_spd(hessian(p, u), minus_g)) {
      d = std::move(*newton);
      bool resolved = true;
      for (std::size_t i = 0; i < n && resolved; ++i) resolved = step_resolved(d[i], u[i]);
      if (resolved) break;
    } else {
      d = minus_g;
      rec.steepest_descent = true;
    }

    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) slope += g[i] * d[i];

    double t = 1.0;
    std::vector<double> trial(n);
    bool accepted = false;
    for (std::size_t k = 0; k <= opts.max_backtracks; ++k, t *= opts.backtrack) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = u[i] + t * d[i];
      if (!feasible(trial)) continue;
      const double et = energy(p, trial);
      if (et <= e + opts.armijo * t * slope + energy_slack(e)) {
        accepted = true;
        e = et;
        break;
      }
    }
    if (!accepted) {
      throw SolverError("chain::minimize: line search failed at iteration " +
                            std::to_string(rec.iter) + " (|grad| = " + std::to_string(gnorm) + ")",
                        std::move(trace));
    }
    u.swap(trial);
    g = gradient(p, u);
    gnorm = sup_norm(g);
    rec.energy = e;
    rec.grad_inf = gnorm;
    rec.step = t;
    trace.push_back(rec);
  }
  return {std::move(u), std::move(trace), e, gnorm};
}

}  // namespace scb::chain
