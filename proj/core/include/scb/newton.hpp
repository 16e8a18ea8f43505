#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace scb {

struct NewtonOptions {
  double tol = 1e-12;            ///< stop when the sup-norm of the gradient is <= tol
  std::size_t max_iter = 100;
  double armijo = 1e-4;
  double backtrack = 0.5;
  std::size_t max_backtracks = 60;
};

/// One accepted iteration of a Newton-type solver.
struct IterationRecord {
  std::size_t iter = 0;
  double energy = 0.0;
  double grad_inf = 0.0;
  double step = 0.0;             ///< accepted line-search step length
  bool steepest_descent = false; ///< Hessian was not positive definite
};

using IterationTrace = std::vector<IterationRecord>;

/// Thrown when a minimizer fails to reach its tolerance. Carries the trace.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, IterationTrace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const IterationTrace& trace() const noexcept { return trace_; }

 private:
  IterationTrace trace_;
};

template <class Field>
struct MinimizeResult {
  Field solution;
  IterationTrace trace;
  double energy = 0.0;
  double grad_inf = 0.0;
  std::size_t iterations() const noexcept { return trace.size(); }
};

/// Roundoff allowance for the Armijo test: near a minimizer energy
/// differences drop below the resolution of the energy itself.
inline double energy_slack(double e) noexcept { return 64.0 * 2.220446049250313e-16 * (1.0 + (e < 0 ? -e : e)); }

/// True when a Newton correction no longer moves x beyond its own resolution,
/// i.e. the residual left over is roundoff in the gradient.
inline bool step_resolved(double d, double x) noexcept {
  return (d < 0 ? -d : d) <= 4.0 * 2.220446049250313e-16 * (1.0 + (x < 0 ? -x : x));
}

}  // namespace scb
