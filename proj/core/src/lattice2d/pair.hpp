#pragma once

#include <string>

#include "scb/errors.hpp"
#include "scb/lattice2d/types.hpp"
#include "scb/potentials.hpp"

namespace scb::lattice2d::detail {

/// phi(|v|), its gradient in v, and optionally its Hessian in v:
/// phi'' vv^T/r^2 + (phi'/r)(I - vv^T/r^2).
struct PairTerm {
  double energy;
  Vec2 force;  // d phi(|v|) / dv
  Mat2 stiffness;
};

inline PairTerm pair_term(const MorseParams& p, const Vec2& v, bool need_hessian) {
  const double r = v.norm();
  if (!(r > 0.0)) throw DomainError("zero-length bond");
  const double d1 = p.dphi(r);
  const Vec2 n = v / r;
  PairTerm t{p.phi(r), d1 * n, Mat2::Zero()};
  if (need_hessian) {
    const Mat2 nn = n * n.transpose();
    t.stiffness = p.ddphi(r) * nn + (d1 / r) * (Mat2::Identity() - nn);
  }
  return t;
}

/// Accumulates c * phi(|F w|) into (value, dF, d2F).
inline void add_affine_term(const MorseParams& p, double c, const Mat2& F, const Vec2& w,
                            double& value, Mat2* dF, Mat4* d2F) {
  const PairTerm t = pair_term(p, F * w, d2F != nullptr);
  value += c * t.energy;
  if (dF) *dF += c * t.force * w.transpose();
  if (d2F) {
    for (int i = 0; i < 2; ++i)
      for (int J = 0; J < 2; ++J)
        for (int k = 0; k < 2; ++k)
          for (int L = 0; L < 2; ++L)
            (*d2F)(2 * i + J, 2 * k + L) += c * t.stiffness(i, k) * w(J) * w(L);
  }
}

}  // namespace scb::lattice2d::detail
