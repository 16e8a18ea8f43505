#include "scb/lattice2d/cauchy_born.hpp"

#include <cmath>
#include <numbers>

#include "pair.hpp"
#include "scb/errors.hpp"
#include "scb/lattice2d/strip.hpp"

namespace scb::lattice2d {
namespace {

void check_det(const Mat2& F) {
  if (!(F.determinant() > 0.0)) throw DomainError("deformation gradient with det F <= 0");
}

bool is_supported_normal(const Vec2& nu) {
  return nu.x() == 0.0 && std::abs(nu.y()) == 1.0;
}

// Stiffness of a bond (dx, dy) against relative normal motion of its ends.
double normal_stiffness(const MorseParams& p, double dx, double dy) {
  const double r = std::hypot(dx, dy);
  const double cy = dy / r, cx = dx / r;
  return p.ddphi(r) * cy * cy + p.dphi(r) / r * cx * cx;
}

}  // namespace

DensityEval evaluate_cb_2d(const MorseParams& p, const Mat2& F, bool need_second) {
  check_det(F);
  DensityEval d;
  const double c = 0.5 / kCellArea;
  for (const Vec2& eta : cb_neighbourhood()) {
    detail::add_affine_term(p, c, F, eta, d.value, &d.first, need_second ? &d.second : nullptr);
  }
  return d;
}

double cb_density_2d(const MorseParams& p, const Mat2& F) {
  check_det(F);
  double w = 0.0;
  for (const Vec2& eta : cb_neighbourhood()) w += p.phi((F * eta).norm());
  return 0.5 / kCellArea * w;
}

Mat2 cb_stress_2d(const MorseParams& p, const Mat2& F) { return evaluate_cb_2d(p, F, false).first; }

Mat4 cb_tangent_2d(const MorseParams& p, const Mat2& F) { return evaluate_cb_2d(p, F).second; }

DensityEval evaluate_surface_2d(const MorseParams& p, const Mat2& F, const Vec2& nu,
                                bool need_second) {
  if (!is_supported_normal(nu)) {
    throw DomainError("surface normal must be (0, 1) or (0, -1)");
  }
  const double s = 0.5, c = 0.5 * std::numbers::sqrt3;
  Mat2 Q;
  Q << c, -s, s, c;
  const Vec2 t(1.0, 0.0);

  DensityEval d;
  Mat4* second = need_second ? &d.second : nullptr;
  detail::add_affine_term(p, 0.5, F, t, d.value, &d.first, second);
  detail::add_affine_term(p, 0.5, F, 2.0 * t, d.value, &d.first, second);
  detail::add_affine_term(p, -0.5, F, std::numbers::sqrt3 * nu, d.value, &d.first, second);
  detail::add_affine_term(p, -0.5, F, 2.0 * Q * nu, d.value, &d.first, second);
  detail::add_affine_term(p, -0.5, F, 2.0 * Q.transpose() * nu, d.value, &d.first, second);
  return d;
}

double scb_surface_density_2d(const MorseParams& p, const Mat2& F, const Vec2& nu) {
  return evaluate_surface_2d(p, F, nu, false).value;
}

Mat2 scb_surface_stress_2d(const MorseParams& p, const Mat2& F, const Vec2& nu) {
  return evaluate_surface_2d(p, F, nu, false).first;
}

double cb_equilibrium_stretch(const MorseParams& p) {
  // Newton on dW/dF22 along diag(1, t), started from the reference state.
  double t = 1.0;
  for (int it = 0; it < 100; ++it) {
    Mat2 F = Mat2::Identity();
    F(1, 1) = t;
    const DensityEval d = evaluate_cb_2d(p, F);
    const double g = d.first(1, 1);
    const double h = d.second(3, 3);
    if (!(h > 0.0)) throw DomainError("Cauchy-Born density not convex along the normal stretch");
    const double step = -g / h;
    t += step;
    if (std::abs(step) <= 1e-15 * t) return t;
  }
  throw DomainError("normal stretch iteration did not converge");
}

double row_chain_lambda(const MorseParams& p, double t) {
  const double h = 0.5 * std::numbers::sqrt3 * t;
  // Bonds to the next row at offsets +-1/2, +-3/2 and to the row after at 0, +-1.
  const double k1 = 2.0 * normal_stiffness(p, 0.5, h) + 2.0 * normal_stiffness(p, 1.5, h);
  const double k2 = normal_stiffness(p, 0.0, 2.0 * h) + 2.0 * normal_stiffness(p, 1.0, 2.0 * h);
  if (!(k1 > 0.0)) throw DomainError("row chain nearest stiffness is not positive");
  const double b = k2 / k1;
  if (!(1.0 + 4.0 * b > 0.0)) throw DomainError("row chain has no real decay root");
  return -2.0 * b / (std::sqrt(1.0 + 4.0 * b) + 1.0 + 2.0 * b);
}

}  // namespace scb::lattice2d
