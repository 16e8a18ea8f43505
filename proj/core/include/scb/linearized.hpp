#pragma once

#include <cstddef>
#include <vector>

#include "scb/potentials.hpp"

/// Closed-form solutions of the atomistic and SCB models linearized about the
/// bulk ground state u = 0 (paper calibration, semi-infinite chain), and their
/// two-term expansions in e^{-alpha}.
namespace scb::linearized {

enum class ModelKind { Atomistic, SurfaceCB };

struct LinearizedSolution {
  ModelKind kind;
  double u0;      ///< leading strain u^a_0 or U^scb_0
  double lambda;  ///< decay factor in (0, 1); 0 for SurfaceCB
  double h0;      ///< first element size; 1 for Atomistic

  /// Lattice strain on bond ell: u0 lambda^ell (atomistic) or the P0 value
  /// interpolated to the lattice, u0 for ell < h0 and 0 beyond (SCB).
  double strain(std::size_t ell) const;
  /// First n lattice strains.
  std::vector<double> lattice_field(std::size_t n) const;
};

/// U^scb_0 = -gamma'(1) / (h0 W''(1) + gamma''(1)). Throws DomainError if
/// the denominator is not positive or h0 < 1.
LinearizedSolution scb_closed_form(const MorseParams& p, double h0);

/// The root in (0, 1) of phi''(2) l^2 + (phi''(1) + 2 phi''(2)) l + phi''(2).
double atomistic_lambda(const MorseParams& p);

/// u^a_ell = phi'(2) lambda^ell / (phi''(1) + phi''(2) (1 + lambda)).
double atomistic_closed_form(const MorseParams& p, std::size_t ell);

LinearizedSolution atomistic_solution(const MorseParams& p);

/// Two-term truncations of the large-alpha expansions.
struct AsymptoticPredictions {
  double u_scb0;    ///< e^-a/(h0 a) [1 - (1 + 2/h0) e^-a]
  double u_a0;      ///< e^-a/a [1 - 4 e^-a]
  double lambda;    ///< e^-a - 4 e^-2a
  double mean_a;    ///< sum_l u^a_l ~ e^-a/a [1 - 3 e^-a]
  double mean_scb;  ///< h0 U^scb_0 ~ e^-a/a [1 - (1 + 2/h0) e^-a]
  double err_p_leading(double p) const;  ///< 2^{1/p} e^-a (h0 = 1); p = inf allowed
  double err_mean_leading;               ///< 2 (1 - 1/h0) e^-a
  double err_mean_h1_fine;               ///< 2 e^-2a, the h0 = 1 refinement
  double alpha;
};

/// Requires alpha >= 4.
AsymptoticPredictions asymptotic_predictions(double alpha, double h0);

}  // namespace scb::linearized
