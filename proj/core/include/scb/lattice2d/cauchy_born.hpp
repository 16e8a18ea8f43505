#pragma once

#include "scb/lattice2d/types.hpp"
#include "scb/potentials.hpp"

namespace scb::lattice2d {

/// Value, first and second derivative of an energy density in F. The second
/// derivative is indexed by (2 i + J, 2 k + L).
struct DensityEval {
  double value = 0.0;
  Mat2 first = Mat2::Zero();
  Mat4 second = Mat4::Zero();
};

/// W(F) = 1/(2 det A) sum over the 18 neighbourhood vectors of phi(|F eta|).
/// Throws DomainError if det F <= 0.
DensityEval evaluate_cb_2d(const MorseParams& p, const Mat2& F, bool need_second = true);

double cb_density_2d(const MorseParams& p, const Mat2& F);
/// dW/dF, the first Piola-Kirchhoff stress.
Mat2 cb_stress_2d(const MorseParams& p, const Mat2& F);
Mat4 cb_tangent_2d(const MorseParams& p, const Mat2& F);

/// Surface density for a surface along a1 with outward normal nu = (0, +-1):
///
///   gamma(F, nu) = phi(|F t|)/2 + phi(2|F t|)/2 - phi(sqrt3 |F nu|)/2
///                  - phi(2|F Q nu|)/2 - phi(2|F Q^T nu|)/2
///
/// with t = (1, 0) and Q the rotation by pi/6. Throws DomainError for any
/// other normal.
DensityEval evaluate_surface_2d(const MorseParams& p, const Mat2& F, const Vec2& nu,
                                bool need_second = true);

double scb_surface_density_2d(const MorseParams& p, const Mat2& F, const Vec2& nu);
Mat2 scb_surface_stress_2d(const MorseParams& p, const Mat2& F, const Vec2& nu);

/// t* minimizing W(diag(1, t)): the Cauchy-Born ground state of the strip,
/// whose period fixes F a1 = a1.
double cb_equilibrium_stretch(const MorseParams& p);

/// Decay factor of the normal strain between lattice rows of the strip,
/// from the chain of rows linearized about F = diag(1, t).
double row_chain_lambda(const MorseParams& p, double t);

}  // namespace scb::lattice2d
