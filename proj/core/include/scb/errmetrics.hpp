#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "scb/continuum1d.hpp"

namespace scb::err {

/// Lattice strain u_l = U_j for l = X_j .. X_{j+1} - 1.
std::vector<double> p0_to_lattice(const continuum::Grid1D& g, std::span<const double> U);

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

/// Unweighted lattice l^p norm, p in [1, inf].
double lp_norm(std::span<const double> v, double p);

/// ||model - ref||_p / ||base - ref||_p. Throws DomainError when the
/// denominator vanishes, DimensionError on length mismatch.
double err_p(std::span<const double> model, std::span<const double> ref,
             std::span<const double> base, double p);

/// |sum(model - ref)| / |sum(base - ref)|.
double err_mean(std::span<const double> model, std::span<const double> ref,
                std::span<const double> base);

struct RateFit {
  double slope = 0.0;  ///< k in error ~ C e^{slope alpha}
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Least-squares fit of log(error) against alpha. Needs >= 4 points with
/// positive, finite errors.
RateFit fit_rate(std::span<const double> alphas, std::span<const double> errors);

/// One row of an error study.
struct ErrorReport {
  int dim = 1;
  double alpha = 0.0;
  double h0 = 0.0;
  std::string grid_id;
  std::string calibration;
  double err_inf = 0.0;
  double err_1 = 0.0;
  double err_2 = 0.0;
  double err_mean = 0.0;
  bool ok = true;        ///< false when a solver failed; errors are NaN
  std::string message;   ///< failure diagnostic
};

/// Fills err_inf, err_1, err_2, err_mean of a 1D report from lattice fields.
void fill_errors(ErrorReport& r, std::span<const double> model, std::span<const double> ref,
                 std::span<const double> base);

}  // namespace scb::err
