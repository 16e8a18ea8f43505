#include "scb/lattice2d/strip.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <string>

#include "pair.hpp"
#include "scb/errors.hpp"

namespace scb::lattice2d {
namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

std::vector<Vec2> make_cb_neighbourhood() {
  std::vector<Vec2> eta;
  for (int m2 = -3; m2 <= 3; ++m2) {
    for (int m1 = -3; m1 <= 3; ++m1) {
      if (m1 == 0 && m2 == 0) continue;
      const Vec2 v = lattice_point(m1, m2);
      if (v.norm() <= 2.0 + 1e-9) eta.push_back(v);
    }
  }
  return eta;
}

}  // namespace

Eigen::VectorXd DeformationField2D::to_vector() const {
  Eigen::VectorXd x(2 * positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) x.segment<2>(2 * i) = positions[i];
  return x;
}

DeformationField2D DeformationField2D::from_vector(const Eigen::VectorXd& x, const Vec2& period) {
  DeformationField2D y;
  y.period = period;
  y.positions.resize(static_cast<std::size_t>(x.size() / 2));
  for (std::size_t i = 0; i < y.positions.size(); ++i) y.positions[i] = x.segment<2>(2 * i);
  return y;
}

std::span<const Vec2> cb_neighbourhood() {
  static const std::vector<Vec2> eta = make_cb_neighbourhood();
  return eta;
}

LatticeStrip2D::LatticeStrip2D(int n1, int n2) : n1_(n1), n2_(n2) {
  if (n1 < 5) throw ConfigError("strip period N1 must be >= 5, got " + std::to_string(n1));
  if (n2 < 4) throw ConfigError("strip height N2 must be >= 4, got " + std::to_string(n2));

  neighbours_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const int c = column(i), r = row(i);
    for (int m2 = -3; m2 <= 3; ++m2) {
      const int rr = r + m2;
      if (rr < 0 || rr > n2_) continue;
      for (int m1 = -3; m1 <= 3; ++m1) {
        if (m1 == 0 && m2 == 0) continue;
        if (lattice_point(m1, m2).norm() > 2.0 + 1e-9) continue;
        const Image s = site(c + m1, rr);
        neighbours_[i].push_back(s);
        if (s.shift > 0 || (s.shift == 0 && s.index > i)) bonds_.push_back({i, s});
      }
    }
  }

  for (int r = 0; r < n2_; ++r) {
    for (int c = 0; c < n1_; ++c) {
      const Image v00 = site(c, r), v10 = site(c + 1, r);
      const Image v01 = site(c, r + 1), v11 = site(c + 1, r + 1);
      micro_.push_back({v00, v10, v01});
      micro_.push_back({v10, v11, v01});
    }
  }
}

Image LatticeStrip2D::site(int col, int row) const noexcept {
  const int k = floor_div(col, n1_);
  return {index(col - k * n1_, row), k};
}

DeformationField2D LatticeStrip2D::identity() const { return affine(Mat2::Identity()); }

DeformationField2D LatticeStrip2D::affine(const Mat2& F) const {
  DeformationField2D y;
  y.period = F * period();
  y.positions.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) y.positions.push_back(F * reference(i));
  return y;
}

double energy_atomistic_2d(const MorseParams& p, const LatticeStrip2D& strip,
                           const DeformationField2D& y) {
  if (y.size() != strip.size()) throw DimensionError("deformation/strip size mismatch");
  double e = 0.0;
  for (const Bond& b : strip.bonds()) {
    const Vec2 v = y.image(b.j) - y.positions[b.i];
    const double r = v.norm();
    if (!(r > 0.0)) throw DomainError("zero-length bond at site " + std::to_string(b.i));
    e += p.phi(r);
  }
  return e;
}

EnergyEval evaluate_atomistic_2d(const MorseParams& p, const LatticeStrip2D& strip,
                                 const DeformationField2D& y, bool need_hessian) {
  if (y.size() != strip.size()) throw DimensionError("deformation/strip size mismatch");
  const auto n = static_cast<Eigen::Index>(2 * strip.size());
  EnergyEval out;
  out.gradient = Eigen::VectorXd::Zero(n);
  if (need_hessian) out.hessian = Eigen::MatrixXd::Zero(n, n);
  for (const Bond& b : strip.bonds()) {
    const auto t = detail::pair_term(p, y.image(b.j) - y.positions[b.i], need_hessian);
    const auto a = static_cast<Eigen::Index>(2 * b.i);
    const auto c = static_cast<Eigen::Index>(2 * b.j.index);
    out.energy += t.energy;
    out.gradient.segment<2>(a) -= t.force;
    out.gradient.segment<2>(c) += t.force;
    if (need_hessian) {
      out.hessian.block<2, 2>(a, a) += t.stiffness;
      out.hessian.block<2, 2>(c, c) += t.stiffness;
      out.hessian.block<2, 2>(a, c) -= t.stiffness;
      out.hessian.block<2, 2>(c, a) -= t.stiffness;
    }
  }
  return out;
}

void write_lattice(std::ostream& os, const LatticeStrip2D& strip) {
  os << "# lattice strip N1=" << strip.n1() << " N2=" << strip.n2() << " atoms=" << strip.size()
     << " bonds=" << strip.bonds().size() << " period=" << strip.period().x() << ' '
     << strip.period().y() << '\n';
  os.precision(17);
  for (std::size_t i = 0; i < strip.size(); ++i) {
    const Vec2 x = strip.reference(i);
    os << "atom " << i << ' ' << strip.column(i) << ' ' << strip.row(i) << ' ' << x.x() << ' '
       << x.y() << '\n';
  }
  for (const Bond& b : strip.bonds()) {
    os << "bond " << b.i << ' ' << b.j.index << ' ' << b.j.shift << '\n';
  }
}

}  // namespace scb::lattice2d
