#include "scb/tridiagonal.hpp"

#include "scb/errors.hpp"

namespace scb {

std::vector<double> SymTridiagonal::multiply(std::span<const double> x) const {
  const std::size_t n = size();
  if (x.size() != n) throw DimensionError("SymTridiagonal::multiply: size mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * x[i];
    if (i > 0) s += off[i - 1] * x[i - 1];
    if (i + 1 < n) s += off[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

std::optional<std::vector<double>> solve_spd(const SymTridiagonal& a, std::span<const double> b) {
  const std::size_t n = a.size();
  if (b.size() != n || (n > 0 && a.off.size() != n - 1)) {
    throw DimensionError("solve_spd: inconsistent tridiagonal system");
  }
  // Forward sweep: d holds the LDL^T pivots, l the unit-lower subdiagonal.
  std::vector<double> d(n), l(n, 0.0), x(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a.diag[i];
    if (i > 0) {
      l[i] = a.off[i - 1] / d[i - 1];
      d[i] -= l[i] * a.off[i - 1];
      x[i] -= l[i] * x[i - 1];
    }
    if (!(d[i] > 0.0)) return std::nullopt;
  }
  for (std::size_t i = n; i-- > 0;) {
    x[i] /= d[i];
    if (i + 1 < n) x[i] -= l[i + 1] * x[i + 1];
  }
  return x;
}

bool is_positive_definite(const SymTridiagonal& a) {
  std::vector<double> zero(a.size(), 0.0);
  return solve_spd(a, zero).has_value();
}

}  // namespace scb
