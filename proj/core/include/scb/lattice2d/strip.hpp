#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "scb/lattice2d/types.hpp"
#include "scb/potentials.hpp"

namespace scb::lattice2d {

/// The 18 vectors of the triangular lattice with |eta| <= 2 (six each at
/// distances 1, sqrt(3) and 2).
std::span<const Vec2> cb_neighbourhood();

/// Bond between a site of the period and a (possibly shifted) neighbour.
struct Bond {
  std::size_t i = 0;
  Image j;
};

/// One period of the triangular-lattice strip: sites A (n1, n2) with
/// 0 <= n1 < N1 and 0 <= n2 <= N2, periodic in the a1 direction with period
/// N1 a1, free surfaces at n2 = 0 and n2 = N2. Every site interacts with the
/// sites of the infinite strip within distance 2.
class LatticeStrip2D {
 public:
  /// Throws ConfigError unless N1 >= 5 (so that no site sees two images of
  /// the same neighbour) and N2 >= 4.
  LatticeStrip2D(int n1, int n2);

  int n1() const noexcept { return n1_; }
  int n2() const noexcept { return n2_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n1_) * (n2_ + 1); }

  std::size_t index(int col, int row) const noexcept {
    return static_cast<std::size_t>(row) * n1_ + static_cast<std::size_t>(col);
  }
  /// Site of lattice coordinates (col, row) for any integer col.
  Image site(int col, int row) const noexcept;
  int column(std::size_t i) const noexcept { return static_cast<int>(i % n1_); }
  int row(std::size_t i) const noexcept { return static_cast<int>(i / n1_); }

  Vec2 reference(std::size_t i) const { return lattice_point(column(i), row(i)); }
  Vec2 period() const { return Vec2(n1_, 0.0); }

  std::span<const Image> neighbours(std::size_t i) const { return neighbours_[i]; }
  /// Every interacting pair once.
  std::span<const Bond> bonds() const noexcept { return bonds_; }

  /// The natural triangulation of the strip: for each cell (col, row), the
  /// triangles (c,r)(c+1,r)(c,r+1) and (c+1,r)(c+1,r+1)(c,r+1).
  std::span<const std::array<Image, 3>> micro_triangles() const noexcept { return micro_; }

  DeformationField2D identity() const;
  /// y(x) = F x, with the period mapped to F N1 a1.
  DeformationField2D affine(const Mat2& F) const;

 private:
  int n1_;
  int n2_;
  std::vector<std::vector<Image>> neighbours_;
  std::vector<Bond> bonds_;
  std::vector<std::array<Image, 3>> micro_;
};

/// E^a(y) = sum over sites xi of 1/2 sum over neighbours eta of phi(|y(eta) - y(xi)|).
/// Throws DomainError on a zero-length bond.
double energy_atomistic_2d(const MorseParams& p, const LatticeStrip2D& strip,
                           const DeformationField2D& y);

EnergyEval evaluate_atomistic_2d(const MorseParams& p, const LatticeStrip2D& strip,
                                 const DeformationField2D& y, bool need_hessian);

/// Text dump: "atom <id> <n1> <n2> <x> <y>" and "bond <i> <j> <shift>" records.
void write_lattice(std::ostream& os, const LatticeStrip2D& strip);

}  // namespace scb::lattice2d
