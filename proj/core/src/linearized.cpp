#include "scb/linearized.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "scb/errors.hpp"

namespace scb::linearized {

double LinearizedSolution::strain(std::size_t ell) const {
  if (kind == ModelKind::SurfaceCB) return static_cast<double>(ell) < h0 ? u0 : 0.0;
  return u0 * std::pow(lambda, static_cast<double>(ell));
}

std::vector<double> LinearizedSolution::lattice_field(std::size_t n) const {
  std::vector<double> u(n);
  for (std::size_t l = 0; l < n; ++l) u[l] = strain(l);
  return u;
}

LinearizedSolution scb_closed_form(const MorseParams& p, double h0) {
  if (!(h0 >= 1.0)) throw DomainError("scb_closed_form: h0 must be >= 1");
  const double denom = h0 * p.ddW(1.0) + p.ddgamma(1.0);
  if (!(denom > 0.0)) {
    throw DomainError("scb_closed_form: h0 W''(1) + gamma''(1) = " + std::to_string(denom) +
                      " is not positive");
  }
  return {ModelKind::SurfaceCB, -p.dgamma(1.0) / denom, 0.0, h0};
}

double atomistic_lambda(const MorseParams& p) {
  const double beta = p.ddphi(2.0) / p.ddphi(1.0);
  // (sqrt(1 + 4b) - 1 - 2b) / (2b) with the numerator rationalized.
  const double lambda = -2.0 * beta / (std::sqrt(1.0 + 4.0 * beta) + 1.0 + 2.0 * beta);
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("atomistic_lambda: root " + std::to_string(lambda) +
                      " outside (0, 1); requires phi''(2) < 0");
  }
  return lambda;
}

double atomistic_closed_form(const MorseParams& p, std::size_t ell) {
  return atomistic_solution(p).strain(ell);
}

LinearizedSolution atomistic_solution(const MorseParams& p) {
  const double lambda = atomistic_lambda(p);
  const double u0 = p.dphi(2.0) / (p.ddphi(1.0) + p.ddphi(2.0) * (1.0 + lambda));
  return {ModelKind::Atomistic, u0, lambda, 1.0};
}

double AsymptoticPredictions::err_p_leading(double pn) const {
  const double e = std::exp(-alpha);
  if (std::isinf(pn)) return e;
  return std::pow(2.0, 1.0 / pn) * e;
}

AsymptoticPredictions asymptotic_predictions(double alpha, double h0) {
  if (!(alpha >= 4.0)) throw DomainError("asymptotic_predictions: alpha must be >= 4");
  if (!(h0 >= 1.0)) throw DomainError("asymptotic_predictions: h0 must be >= 1");
  const double e = std::exp(-alpha);
  const double lead = e / alpha;
  AsymptoticPredictions a{};
  a.alpha = alpha;
  a.u_scb0 = lead / h0 * (1.0 - (1.0 + 2.0 / h0) * e);
  a.u_a0 = lead * (1.0 - 4.0 * e);
  a.lambda = e - 4.0 * e * e;
  a.mean_a = lead * (1.0 - 3.0 * e);
  a.mean_scb = lead * (1.0 - (1.0 + 2.0 / h0) * e);
  a.err_mean_leading = 2.0 * (1.0 - 1.0 / h0) * e;
  a.err_mean_h1_fine = 2.0 * e * e;
  return a;
}

}  // namespace scb::linearized
