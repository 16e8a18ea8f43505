#include "scb/lattice2d/error2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "scb/errors.hpp"

namespace scb::lattice2d {
namespace {

using Polygon = std::vector<Vec2>;

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

double polygon_area(const Polygon& poly) {
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    s += cross(poly[i], poly[(i + 1) % poly.size()]);
  }
  return 0.5 * s;
}

// Sutherland-Hodgman: keep the part of poly left of the directed line p -> q.
Polygon clip(const Polygon& poly, const Vec2& p, const Vec2& q) {
  Polygon out;
  const Vec2 e = q - p;
  const auto side = [&](const Vec2& x) { return cross(e, x - p); };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % poly.size()];
    const double sa = side(a), sb = side(b);
    if (sa >= 0.0) out.push_back(a);
    if ((sa >= 0.0) != (sb >= 0.0)) out.push_back(a + (sa / (sa - sb)) * (b - a));
  }
  return out;
}

struct Box {
  double x0, x1, y0, y1;
};

Box bounds(const std::array<Vec2, 3>& t) {
  Box b{t[0].x(), t[0].x(), t[0].y(), t[0].y()};
  for (const Vec2& v : t) {
    b.x0 = std::min(b.x0, v.x());
    b.x1 = std::max(b.x1, v.x());
    b.y0 = std::min(b.y0, v.y());
    b.y1 = std::max(b.y1, v.y());
  }
  return b;
}

bool disjoint(const Box& a, const Box& b) {
  return a.x1 <= b.x0 || b.x1 <= a.x0 || a.y1 <= b.y0 || b.y1 <= a.y0;
}

double ratio(double num, double den, const char* what) {
  if (!(den > 0.0)) throw DomainError(std::string("Cauchy-Born ") + what + " error vanishes");
  return num / den;
}

}  // namespace

double triangle_overlap(const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b) {
  Polygon poly(a.begin(), a.end());
  for (int k = 0; k < 3 && !poly.empty(); ++k) poly = clip(poly, b[k], b[(k + 1) % 3]);
  return poly.size() < 3 ? 0.0 : std::max(0.0, polygon_area(poly));
}

Mat2 micro_gradient(const LatticeStrip2D& strip, const DeformationField2D& y, std::size_t k) {
  const auto& tri = strip.micro_triangles()[k];
  const auto ref = [&](const Image& s) -> Vec2 {
    return strip.reference(s.index) + s.shift * strip.period();
  };
  Mat2 D, Y;
  D.col(0) = ref(tri[1]) - ref(tri[0]);
  D.col(1) = ref(tri[2]) - ref(tri[0]);
  Y.col(0) = y.image(tri[1]) - y.image(tri[0]);
  Y.col(1) = y.image(tri[2]) - y.image(tri[0]);
  return Y * D.inverse();
}

Error2D err2d(const DeformationField2D& y_scb, const DeformationField2D& y_cb,
              const DeformationField2D& y_a, const LatticeStrip2D& strip, const FEMesh2D& mesh) {
  if (strip.n1() != mesh.n1() || strip.n2() != mesh.n2()) {
    throw DimensionError("strip and mesh cover different domains");
  }
  if (y_scb.size() != mesh.size() || y_cb.size() != mesh.size() || y_a.size() != strip.size()) {
    throw DimensionError("deformation sizes do not match strip/mesh");
  }

  const std::size_t nm = mesh.triangle_count();
  std::vector<std::array<Vec2, 3>> macro(nm);
  std::vector<Box> macro_box(nm);
  std::vector<Mat2> g_scb(nm), g_cb(nm);
  for (std::size_t t = 0; t < nm; ++t) {
    macro[t] = mesh.triangle_lattice(t);
    macro_box[t] = bounds(macro[t]);
    g_scb[t] = mesh.gradient(y_scb, t);
    g_cb[t] = mesh.gradient(y_cb, t);
  }

  double l2_s = 0, l2_c = 0, l1_s = 0, l1_c = 0, inf_s = 0, inf_c = 0;
  Error2D out;
  const auto micro = strip.micro_triangles();
  for (std::size_t k = 0; k < micro.size(); ++k) {
    std::array<Vec2, 3> m;
    for (int v = 0; v < 3; ++v) {
      const Image& s = micro[k][v];
      m[v] = Vec2(strip.column(s.index) + s.shift * strip.n1(), strip.row(s.index));
    }
    const Box mb = bounds(m);
    const Mat2 ga = micro_gradient(strip, y_a, k);
    for (std::size_t t = 0; t < nm; ++t) {
      if (disjoint(mb, macro_box[t])) continue;
      const double area = kCellArea * triangle_overlap(m, macro[t]);
      if (area <= 0.0) continue;
      const Mat2 ds = g_scb[t] - ga, dc = g_cb[t] - ga;
      const double ns = ds.norm(), nc = dc.norm();
      l2_s += area * ns * ns;
      l2_c += area * nc * nc;
      l1_s += area * ns;
      l1_c += area * nc;
      // Pieces of vanishing area carry no L^inf weight.
      if (area > 1e-12) {
        inf_s = std::max(inf_s, ns);
        inf_c = std::max(inf_c, nc);
      }
      out.mean_scb += area * ds;
      out.mean_cb += area * dc;
    }
  }
  out.err_2 = ratio(std::sqrt(l2_s), std::sqrt(l2_c), "L2");
  out.err_1 = ratio(l1_s, l1_c, "L1");
  out.err_inf = ratio(inf_s, inf_c, "Linf");
  out.err_mean = ratio(out.mean_scb.norm(), out.mean_cb.norm(), "mean");
  const double den22 = std::abs(out.mean_cb(1, 1));
  out.err_mean_22 = den22 > 0.0 ? std::abs(out.mean_scb(1, 1)) / den22
                                : std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace scb::lattice2d
