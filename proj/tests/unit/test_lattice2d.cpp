#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scb/errors.hpp"
#include "scb/lattice2d/cauchy_born.hpp"
#include "scb/lattice2d/error2d.hpp"
#include "scb/lattice2d/fe_energy.hpp"
#include "scb/lattice2d/mesh.hpp"
#include "scb/lattice2d/minimize.hpp"
#include "scb/lattice2d/strip.hpp"
#include "scb/linearized.hpp"

namespace {

using namespace scb::lattice2d;
using scb::MorseParams;
namespace t = scb::testing;

constexpr double kSqrt3 = std::numbers::sqrt3;

Mat2 random_near_identity(std::mt19937_64& g, double amp) {
  Mat2 F;
  F << 1 + t::uniform(g, -amp, amp), t::uniform(g, -amp, amp), t::uniform(g, -amp, amp),
      1 + t::uniform(g, -amp, amp);
  return F;
}

Eigen::VectorXd flatten(const Mat2& F) { return Eigen::Vector4d(F(0, 0), F(0, 1), F(1, 0), F(1, 1)); }
Mat2 unflatten(const Eigen::VectorXd& x) {
  Mat2 F;
  F << x(0), x(1), x(2), x(3);
  return F;
}

Mat2 rotation(double th) {
  Mat2 Q;
  Q << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  return Q;
}

DeformationField2D perturbed(DeformationField2D y, std::mt19937_64& g, double amp) {
  for (Vec2& x : y.positions) x += Vec2(t::uniform(g, -amp, amp), t::uniform(g, -amp, amp));
  return y;
}

// ---- neighbourhood and strip ----

TEST(Neighbourhood, EighteenVectorsInThreeShells) {
  const auto eta = cb_neighbourhood();
  ASSERT_EQ(eta.size(), 18u);
  int shells[3] = {0, 0, 0};
  for (const Vec2& v : eta) {
    const double r = v.norm();
    if (std::abs(r - 1) < 1e-12) ++shells[0];
    else if (std::abs(r - kSqrt3) < 1e-12) ++shells[1];
    else if (std::abs(r - 2) < 1e-12) ++shells[2];
  }
  EXPECT_EQ(shells[0], 6);
  EXPECT_EQ(shells[1], 6);
  EXPECT_EQ(shells[2], 6);
}

TEST(Strip, NeighbourCountsAndWrap) {
  const LatticeStrip2D s(10, 20);
  EXPECT_EQ(s.size(), 210u);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int r = s.row(i);
    if (r >= 2 && r <= 18) EXPECT_EQ(s.neighbours(i).size(), 18u) << "site " << i;
    if (r == 0 || r == 20) EXPECT_EQ(s.neighbours(i).size(), 11u) << "site " << i;
    if (r == 1 || r == 19) EXPECT_EQ(s.neighbours(i).size(), 15u) << "site " << i;
  }
  // (0, 5) sees (-1, 5) as the image of (9, 5) one period to the left.
  const auto nb = s.neighbours(s.index(0, 5));
  EXPECT_NE(std::find(nb.begin(), nb.end(), Image{s.index(9, 5), -1}), nb.end());
  EXPECT_EQ(s.site(12, 3), (Image{s.index(2, 3), 1}));

  std::size_t half = 0;
  for (std::size_t i = 0; i < s.size(); ++i) half += s.neighbours(i).size();
  EXPECT_EQ(2 * s.bonds().size(), half);
  EXPECT_EQ(s.micro_triangles().size(), 2u * 10 * 20);
  EXPECT_THROW(LatticeStrip2D(4, 10), scb::ConfigError);
  EXPECT_THROW(LatticeStrip2D(6, 3), scb::ConfigError);
}

TEST(Strip, BulkRowEnergyIsShellSum) {
  // Adding one row to a strip adds N1 bulk atoms' worth of energy.
  const auto p = MorseParams::paper(6.0);
  const LatticeStrip2D a(6, 10), b(6, 11);
  const double per_atom = 3.0 * (p.phi(1.0) + p.phi(kSqrt3) + p.phi(2.0));
  EXPECT_NEAR(energy_atomistic_2d(p, b, b.identity()) - energy_atomistic_2d(p, a, a.identity()),
              6 * per_atom, 1e-11);
}

TEST(Strip, BulkForcesVanishUnderHomogeneousDeformation) {
  const auto p = MorseParams::paper(8.0);
  const LatticeStrip2D s(6, 12);
  Mat2 F = Mat2::Identity();
  F(1, 1) = cb_equilibrium_stretch(p);
  const auto e = evaluate_atomistic_2d(p, s, s.affine(F), false);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.row(i) >= 2 && s.row(i) <= 10) {
      EXPECT_LT(e.gradient.segment<2>(2 * i).norm(), 1e-10) << "site " << i;
    }
  }
}

TEST(Strip, AtomisticDerivativesMatchFiniteDifferences) {
  auto g = t::rng(5);
  const LatticeStrip2D s(6, 8);
  for (int k = 0; k < 20; ++k) {
    const auto p = k % 2 ? MorseParams::paper(t::uniform(g, 3, 9)) : MorseParams::unit(t::uniform(g, 2, 9));
    const auto y = perturbed(s.affine(random_near_identity(g, 0.02)), g, 0.03);
    const Vec2 per = y.period;
    const auto e = evaluate_atomistic_2d(p, s, y, true);
    EXPECT_NEAR(e.energy, energy_atomistic_2d(p, s, y), 1e-10);
    const Eigen::VectorXd fd = t::fd_gradient(
        [&](const Eigen::VectorXd& x) {
          return energy_atomistic_2d(p, s, DeformationField2D::from_vector(x, per));
        },
        y.to_vector(), 1e-4 / p.alpha());
    EXPECT_LT(t::rel_diff(e.gradient, fd), 1e-6);
    if (k < 4) {
      const Eigen::MatrixXd fh = t::fd_jacobian(
          [&](const Eigen::VectorXd& x) {
            return evaluate_atomistic_2d(p, s, DeformationField2D::from_vector(x, per), false).gradient;
          },
          y.to_vector(), 1e-4 / p.alpha());
      EXPECT_LT(t::rel_diff(e.hessian, fh), 1e-5);
    }
  }
}

TEST(Strip, CoincidentAtomsAreADomainError) {
  const auto p = MorseParams::paper(6.0);
  const LatticeStrip2D s(6, 6);
  auto y = s.identity();
  y.positions[1] = y.positions[0];
  EXPECT_THROW(energy_atomistic_2d(p, s, y), scb::DomainError);
}

TEST(Strip, LatticeDump) {
  std::ostringstream os;
  const LatticeStrip2D s(5, 4);
  write_lattice(os, s);
  const std::string out = os.str();
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 1 + 25 + static_cast<long>(s.bonds().size()));
  EXPECT_NE(out.find("atom 0 0 0 0 0"), std::string::npos);
}

// ---- densities ----

TEST(CauchyBorn, IdentityDensityMatchesFrozenValue) {
  // (1/(2 det A)) (6 phi(1) + 6 phi(sqrt3) + 6 phi(2)) at alpha = 6, 40 digits.
  const auto p = MorseParams::paper(6.0);
  EXPECT_NEAR(cb_density_2d(p, Mat2::Identity()), 1.6550214616941043158, 1e-14);
  EXPECT_NEAR(cb_density_2d(p, Mat2::Identity()),
              3.0 * (p.phi(1.0) + p.phi(kSqrt3) + p.phi(2.0)) / kCellArea, 1e-14);
}

TEST(CauchyBorn, FrameIndifference) {
  auto g = t::rng(6);
  const auto p = MorseParams::paper(7.0);
  const Vec2 up(0, 1);
  for (int k = 0; k < 10; ++k) {
    const Mat2 F = random_near_identity(g, 0.05);
    const Mat2 Q = rotation(t::uniform(g, -3, 3));
    EXPECT_NEAR(cb_density_2d(p, Q * F), cb_density_2d(p, F), 1e-12);
    EXPECT_NEAR(scb_surface_density_2d(p, Q * F, up), scb_surface_density_2d(p, F, up), 1e-12);
    EXPECT_NEAR(scb_surface_density_2d(p, Q * F, -up), scb_surface_density_2d(p, F, -up), 1e-12);
  }
}

TEST(CauchyBorn, StressAndTangentMatchFiniteDifferences) {
  auto g = t::rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto p = MorseParams::paper(t::uniform(g, 3, 12));
    const Mat2 F = k == 0 ? Mat2::Identity() : random_near_identity(g, 0.05);
    const double h = 1e-4 / p.alpha();
    const auto d = evaluate_cb_2d(p, F);
    const auto fd = t::fd_gradient([&](const Eigen::VectorXd& x) { return cb_density_2d(p, unflatten(x)); },
                                   flatten(F), h);
    EXPECT_LT(t::rel_diff(flatten(d.first), fd), 1e-6);
    const auto fh = t::fd_jacobian(
        [&](const Eigen::VectorXd& x) { return flatten(cb_stress_2d(p, unflatten(x))); }, flatten(F), h);
    EXPECT_LT(t::rel_diff(d.second, fh), 1e-5);
    EXPECT_LT((cb_tangent_2d(p, F) - cb_tangent_2d(p, F).transpose()).norm(), 1e-9);
  }
}

TEST(CauchyBorn, InvertedDeformationIsADomainError) {
  const auto p = MorseParams::paper(6.0);
  Mat2 F = Mat2::Identity();
  F(1, 1) = -1;
  EXPECT_THROW(cb_density_2d(p, F), scb::DomainError);
  EXPECT_THROW(evaluate_cb_2d(p, Mat2::Zero()), scb::DomainError);
}

TEST(Surface, IdentityValue) {
  const auto p = MorseParams::paper(6.0);
  const double expect = 0.5 * p.phi(1.0) - 0.5 * p.phi(2.0) - 0.5 * p.phi(kSqrt3);
  EXPECT_NEAR(scb_surface_density_2d(p, Mat2::Identity(), Vec2(0, 1)), expect, 1e-15);
  EXPECT_NEAR(scb_surface_density_2d(p, Mat2::Identity(), Vec2(0, -1)), expect, 1e-15);
  EXPECT_THROW(scb_surface_density_2d(p, Mat2::Identity(), Vec2(1, 0)), scb::DomainError);
  EXPECT_THROW(scb_surface_density_2d(p, Mat2::Identity(), Vec2(0.6, 0.8)), scb::DomainError);
}

TEST(Surface, DerivativesMatchFiniteDifferences) {
  auto g = t::rng(8);
  for (int k = 0; k < 20; ++k) {
    const auto p = MorseParams::unit(t::uniform(g, 2, 12));
    const Mat2 F = random_near_identity(g, 0.05);
    const Vec2 nu(0, k % 2 ? 1.0 : -1.0);
    const double h = 1e-4 / p.alpha();
    const auto d = evaluate_surface_2d(p, F, nu);
    const auto fd = t::fd_gradient(
        [&](const Eigen::VectorXd& x) { return scb_surface_density_2d(p, unflatten(x), nu); }, flatten(F), h);
    EXPECT_LT(t::rel_diff(flatten(d.first), fd, 1e-6), 1e-6);
    const auto fh = t::fd_jacobian(
        [&](const Eigen::VectorXd& x) { return flatten(scb_surface_stress_2d(p, unflatten(x), nu)); },
        flatten(F), h);
    EXPECT_LT(t::rel_diff(d.second, fh, 1e-6), 1e-5);
  }
}

TEST(CauchyBorn, EquilibriumStretch) {
  const auto p = MorseParams::paper(6.0);
  // 40-digit root of dW/dF22 along diag(1, t).
  EXPECT_NEAR(cb_equilibrium_stretch(p), 0.99527262708690536315, 1e-14);
  EXPECT_NEAR(cb_equilibrium_stretch(MorseParams::paper(8.0)), 0.99917530114712303408, 1e-14);
  const double gs = t::golden_section(
      [&](double s) {
        Mat2 F = Mat2::Identity();
        F(1, 1) = s;
        return cb_density_2d(p, F);
      },
      0.9, 1.1, 1e-10);
  EXPECT_NEAR(cb_equilibrium_stretch(p), gs, 1e-7);
}

// ---- meshes ----

TEST(Mesh, CoarseLayout) {
  const auto m = build_mesh(10, 20, 5, false);
  EXPECT_EQ(m.size(), 10u);  // 2 columns x 5 node rows
  EXPECT_EQ(m.triangle_count(), 16u);
  EXPECT_EQ(m.boundary_edges().size(), 4u);
  double area = 0;
  for (std::size_t t = 0; t < m.triangle_count(); ++t) {
    EXPECT_GT(m.area(t), 0.0);
    area += m.area(t);
  }
  EXPECT_NEAR(area, 200 * kCellArea, 1e-10);
}

TEST(Mesh, LayeredLayout) {
  const auto m = build_mesh(10, 20, 5, true);
  std::vector<double> rows;
  for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(m.lattice(i).y());
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  EXPECT_EQ(rows, (std::vector<double>{0, 1, 5, 10, 15, 19, 20}));
  for (const auto& e : m.boundary_edges()) {
    EXPECT_TRUE(e.nu == Vec2(0, 1) || e.nu == Vec2(0, -1));
    EXPECT_EQ(m.lattice(e.a).y(), e.nu.y() > 0 ? 20.0 : 0.0);
  }
}

TEST(Mesh, RejectsBadConfigurations) {
  EXPECT_THROW(build_mesh(10, 20, 3, false), scb::ConfigError);
  EXPECT_THROW(build_mesh(10, 20, 1, true), scb::ConfigError);
  std::vector<Vec2> nodes{{0, 0}, {1, 0}, {0, 1}};
  std::vector<std::array<Image, 3>> flipped{{Image{0, 0}, Image{2, 0}, Image{1, 0}}};
  EXPECT_THROW(FEMesh2D(1, 1, nodes, flipped, {}), scb::MeshError);
  std::vector<std::array<Image, 3>> missing{{Image{0, 0}, Image{1, 0}, Image{5, 0}}};
  EXPECT_THROW(FEMesh2D(1, 1, nodes, missing, {}), scb::DimensionError);
}

TEST(Mesh, Dump) {
  std::ostringstream os;
  write_mesh(os, build_mesh(10, 20, 5, false));
  const std::string out = os.str();
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 1 + 10 + 16 + 4);
}

// ---- finite element energy ----

TEST(FeEnergy, HomogeneousExactnessOnStrip) {
  auto g = t::rng(9);
  const auto p = MorseParams::paper(6.0);
  const LatticeStrip2D s(6, 12);
  for (bool layer : {false, true}) {
    const auto m = build_mesh(6, 12, 3, layer);
    for (int k = 0; k < 10; ++k) {
      const Mat2 F = random_near_identity(g, 0.01);
      const double ea = energy_atomistic_2d(p, s, s.affine(F));
      const double es = energy_scb_2d(p, m, m.affine(F));
      EXPECT_LE(std::abs(es - ea), 1e-10 * std::abs(ea) + 1e-12) << "layer " << layer;
    }
  }
}

TEST(FeEnergy, DerivativesMatchFiniteDifferences) {
  auto g = t::rng(10);
  for (int k = 0; k < 20; ++k) {
    const auto p = k % 2 ? MorseParams::paper(t::uniform(g, 3, 10)) : MorseParams::unit(t::uniform(g, 2, 10));
    const auto m = build_mesh(10, 20, 5, k % 3 == 0);
    const auto y = perturbed(m.affine(random_near_identity(g, 0.02)), g, 0.05);
    const bool surf = k % 4 != 1;
    const Vec2 per = y.period;
    const auto e = evaluate_scb_2d(p, m, y, surf, true);
    EXPECT_NEAR(e.energy, energy_scb_2d(p, m, y, surf), 1e-10 * std::abs(e.energy));
    const auto fd = t::fd_gradient(
        [&](const Eigen::VectorXd& x) {
          return energy_scb_2d(p, m, DeformationField2D::from_vector(x, per), surf);
        },
        y.to_vector(), 1e-4 / p.alpha());
    EXPECT_LT(t::rel_diff(e.gradient, fd), 1e-6);
    const auto fh = t::fd_jacobian(
        [&](const Eigen::VectorXd& x) {
          return evaluate_scb_2d(p, m, DeformationField2D::from_vector(x, per), surf, false).gradient;
        },
        y.to_vector(), 1e-4 / p.alpha());
    EXPECT_LT(t::rel_diff(e.hessian, fh), 1e-5);
  }
}

TEST(FeEnergy, SplittingATriangleLeavesEnergyUnchanged) {
  auto g = t::rng(11);
  const auto p = MorseParams::paper(6.0);
  const auto m = build_mesh(10, 20, 5, false);
  const auto y = perturbed(m.affine(random_near_identity(g, 0.02)), g, 0.05);

  // Interior triangle without periodic images, split at its centroid.
  std::size_t split = 0;
  for (std::size_t t = 0; t < m.triangle_count(); ++t) {
    const auto& tri = m.triangles()[t];
    const bool plain = tri[0].shift == 0 && tri[1].shift == 0 && tri[2].shift == 0;
    const auto x = m.triangle_lattice(t);
    if (plain && x[0].y() > 0 && x[2].y() < 20 && x[1].y() > 0) {
      split = t;
      break;
    }
  }
  std::vector<Vec2> nodes;
  for (std::size_t i = 0; i < m.size(); ++i) nodes.push_back(m.lattice(i));
  const auto x = m.triangle_lattice(split);
  nodes.push_back((x[0] + x[1] + x[2]) / 3.0);
  const Image c{nodes.size() - 1, 0};
  std::vector<std::array<Image, 3>> tris(m.triangles().begin(), m.triangles().end());
  const auto old = tris[split];
  tris[split] = {old[0], old[1], c};
  tris.push_back({old[1], old[2], c});
  tris.push_back({old[2], old[0], c});
  const FEMesh2D fine(10, 20, nodes, tris,
                      std::vector<BoundaryEdge>(m.boundary_edges().begin(), m.boundary_edges().end()));

  auto yf = y;
  yf.positions.push_back((y.image(old[0]) + y.image(old[1]) + y.image(old[2])) / 3.0);
  EXPECT_NEAR(energy_scb_2d(p, fine, yf), energy_scb_2d(p, m, y), 1e-11);
}

// ---- minimization ----

TEST(Minimize, CauchyBornMinimizerIsHomogeneous) {
  const auto p = MorseParams::paper(6.0);
  const auto m = build_mesh(10, 20, 5, true);
  const auto r = relax_fe(p, m, m.identity(), false);
  const double ts = cb_equilibrium_stretch(p);
  for (std::size_t t = 0; t < m.triangle_count(); ++t) {
    const Mat2 F = m.gradient(r.solution, t);
    EXPECT_NEAR(F(0, 0), 1.0, 1e-10);
    EXPECT_NEAR(F(1, 1), ts, 1e-10);
    EXPECT_NEAR(F(0, 1), 0.0, 1e-10);
    EXPECT_NEAR(F(1, 0), 0.0, 1e-10);
  }
  EXPECT_LE(r.grad_inf, 1e-9);
}

TEST(Minimize, SurfaceModelDescends) {
  const auto p = MorseParams::paper(6.0);
  const auto m = build_mesh(10, 20, 5, true);
  const auto cb = relax_fe(p, m, m.identity(), false);
  const auto scb = relax_fe(p, m, cb.solution, true);
  EXPECT_LE(scb.energy, energy_scb_2d(p, m, cb.solution, true));
  EXPECT_FALSE(scb.trace.empty());
}

// Per-row normal strain (row spacing relative to the bulk) of a relaxed strip.
std::vector<double> row_strains(const LatticeStrip2D& s, const DeformationField2D& y, double ts) {
  std::vector<double> mean(s.n2() + 1, 0.0), out;
  for (std::size_t i = 0; i < s.size(); ++i) mean[s.row(i)] += y.positions[i].y() / s.n1();
  for (int r = 0; r < s.n2(); ++r) out.push_back((mean[r + 1] - mean[r]) / (0.5 * kSqrt3) - ts);
  return out;
}

TEST(Minimize, AtomisticStripReducesToRowChain) {
  for (double a : {6.0, 8.0}) {
    const auto p = MorseParams::paper(a);
    const LatticeStrip2D s(5, 20);
    const double ts = cb_equilibrium_stretch(p);
    Mat2 F = Mat2::Identity();
    F(1, 1) = ts;
    auto opts = default_options_2d();
    opts.tol = 1e-11;
    const auto r = relax_atomistic(p, s, s.affine(F), opts);

    // No tangential motion.
    const auto y0 = s.affine(F);
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_NEAR(r.solution.positions[i].x(), y0.positions[i].x(), 1e-9);
    }
    // The first row spacing opens up, like the first bond of the chain.
    const auto st = row_strains(s, r.solution, ts);
    EXPECT_GT(st[0], 0.0);
    EXPECT_GT(scb::linearized::atomistic_solution(p).u0, 0.0);
    EXPECT_NEAR(st.back(), st.front(), 1e-10);

    // Geometric decay at the row-chain rate.
    const double lam = row_chain_lambda(p, ts);
    std::vector<double> k, logs;
    for (int j = 0; j < 3; ++j) {
      k.push_back(j);
      logs.push_back(std::log(std::abs(st[j])));
    }
    EXPECT_NEAR(t::ls_slope(k, logs) / std::log(lam), 1.0, 0.15) << "alpha " << a;
    EXPECT_NEAR(st[2] / st[1], lam, 0.02 * lam) << "alpha " << a;
  }
}

TEST(Minimize, FailureCarriesTrace) {
  const auto p = MorseParams::paper(6.0);
  const LatticeStrip2D s(5, 6);
  auto opts = default_options_2d();
  opts.max_iter = 1;
  opts.tol = 1e-300;
  try {
    relax_atomistic(p, s, s.identity(), opts);
    FAIL() << "expected SolverError";
  } catch (const scb::SolverError& e) {
    EXPECT_EQ(e.trace().size(), 1u);
  }
}

// ---- 2D errors ----

TEST(Error2D, TriangleOverlap) {
  const std::array<Vec2, 3> a{Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)};
  const std::array<Vec2, 3> b{Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)};
  const std::array<Vec2, 3> big{Vec2(-1, -1), Vec2(3, -1), Vec2(-1, 3)};
  const std::array<Vec2, 3> shifted{Vec2(0.5, 0), Vec2(1.5, 0), Vec2(0.5, 1)};
  EXPECT_NEAR(triangle_overlap(a, a), 0.5, 1e-15);
  EXPECT_NEAR(triangle_overlap(a, b), 0.0, 1e-15);
  EXPECT_NEAR(triangle_overlap(a, big), 0.5, 1e-15);
  EXPECT_NEAR(triangle_overlap(a, shifted), 0.125, 1e-15);
}

TEST(Error2D, MicroTrianglesAreCoveredExactly) {
  const LatticeStrip2D s(10, 20);
  const auto m = build_mesh(10, 20, 5, true);
  for (std::size_t k = 0; k < s.micro_triangles().size(); k += 7) {
    std::array<Vec2, 3> tri;
    for (int v = 0; v < 3; ++v) {
      const Image& im = s.micro_triangles()[k][v];
      tri[v] = Vec2(s.column(im.index) + im.shift * 10, s.row(im.index));
    }
    double sum = 0;
    for (std::size_t t = 0; t < m.triangle_count(); ++t) sum += triangle_overlap(tri, m.triangle_lattice(t));
    EXPECT_NEAR(sum, 0.5, 1e-13) << "micro triangle " << k;
  }
}

TEST(Error2D, TrivialRatios) {
  auto g = t::rng(12);
  const LatticeStrip2D s(10, 20);
  const auto ya = perturbed(s.identity(), g, 0.01);
  // With h = 1 the mesh is the lattice's own triangulation.
  const auto m1 = build_mesh(10, 20, 1, false);
  ASSERT_EQ(m1.size(), s.size());
  const auto yb = perturbed(m1.identity(), g, 0.01);
  DeformationField2D same = ya;
  const auto e0 = err2d(same, yb, ya, s, m1);
  EXPECT_NEAR(e0.err_2, 0.0, 1e-12);
  EXPECT_NEAR(e0.err_mean, 0.0, 1e-12);

  const auto m = build_mesh(10, 20, 5, false);
  const auto yc = perturbed(m.identity(), g, 0.01);
  const auto e1 = err2d(yc, yc, ya, s, m);
  EXPECT_DOUBLE_EQ(e1.err_2, 1.0);
  EXPECT_DOUBLE_EQ(e1.err_1, 1.0);
  EXPECT_DOUBLE_EQ(e1.err_inf, 1.0);
  EXPECT_DOUBLE_EQ(e1.err_mean, 1.0);

  EXPECT_THROW(err2d(yc, yc, ya, LatticeStrip2D(10, 15), m), scb::DimensionError);
  EXPECT_THROW(err2d(yc, yc, yc, s, m), scb::DimensionError);
}

TEST(Error2D, MeanStrainMoreAccurateThanStrainField) {
  const auto p = MorseParams::paper(8.0);
  const LatticeStrip2D s(10, 20);
  Mat2 F = Mat2::Identity();
  F(1, 1) = cb_equilibrium_stretch(p);
  const auto ya = relax_atomistic(p, s, s.affine(F)).solution;
  for (bool layer : {false, true}) {
    const auto m = build_mesh(10, 20, 5, layer);
    const auto cb = relax_fe(p, m, m.affine(F), false).solution;
    const auto scb = relax_fe(p, m, cb, true).solution;
    const auto e = err2d(scb, cb, ya, s, m);
    EXPECT_LT(e.err_mean, e.err_2) << "layer " << layer;
    EXPECT_GT(e.err_2, 0.0);
  }
}

}  // namespace
