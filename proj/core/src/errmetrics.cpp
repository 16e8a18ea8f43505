#include "scb/errmetrics.hpp"

#include <algorithm>
#include <cmath>

#include "scb/errors.hpp"

namespace scb::err {
namespace {

void check_same(std::size_t a, std::size_t b, std::size_t c) {
  if (a != b || a != c) throw DimensionError("error metric: field lengths differ");
  if (a == 0) throw DimensionError("error metric: empty fields");
}

}  // namespace

std::vector<double> p0_to_lattice(const continuum::Grid1D& g, std::span<const double> U) {
  if (U.size() != g.elements()) throw DimensionError("p0_to_lattice: field/grid size mismatch");
  std::vector<double> u;
  u.reserve(static_cast<std::size_t>(g.length()));
  const auto x = g.nodes();
  for (std::size_t j = 0; j < U.size(); ++j) {
    for (auto l = x[j]; l < x[j + 1]; ++l) u.push_back(U[j]);
  }
  return u;
}

double lp_norm(std::span<const double> v, double p) {
  if (!(p >= 1.0)) throw DomainError("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  // Scale by the max entry so that p-th powers of tiny strains do not underflow.
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double err_p(std::span<const double> model, std::span<const double> ref,
             std::span<const double> base, double p) {
  check_same(model.size(), ref.size(), base.size());
  std::vector<double> num(model.size()), den(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) {
    num[i] = model[i] - ref[i];
    den[i] = base[i] - ref[i];
  }
  const double d = lp_norm(den, p);
  if (d == 0.0) throw DomainError("err_p: reference equals baseline");
  return lp_norm(num, p) / d;
}

double err_mean(std::span<const double> model, std::span<const double> ref,
                std::span<const double> base) {
  check_same(model.size(), ref.size(), base.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    num += model[i] - ref[i];
    den += base[i] - ref[i];
  }
  if (den == 0.0) throw DomainError("err_mean: reference and baseline have equal mean strain");
  return std::abs(num) / std::abs(den);
}

RateFit fit_rate(std::span<const double> alphas, std::span<const double> errors) {
  if (alphas.size() != errors.size()) throw DimensionError("fit_rate: length mismatch");
  if (alphas.size() < 4) throw DomainError("fit_rate: need at least 4 points");
  const auto n = static_cast<double>(alphas.size());
  double sx = 0, sy = 0;
  std::vector<double> y(errors.size());
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(errors[i] > 0.0) || !std::isfinite(errors[i])) {
      throw DomainError("fit_rate: errors must be positive and finite");
    }
    y[i] = std::log(errors[i]);
    sx += alphas[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double dx = alphas[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw DomainError("fit_rate: alphas are all equal");
  RateFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

void fill_errors(ErrorReport& r, std::span<const double> model, std::span<const double> ref,
                 std::span<const double> base) {
  r.err_inf = err_p(model, ref, base, kInfNorm);
  r.err_1 = err_p(model, ref, base, 1.0);
  r.err_2 = err_p(model, ref, base, 2.0);
  r.err_mean = err_mean(model, ref, base);
}

}  // namespace scb::err
