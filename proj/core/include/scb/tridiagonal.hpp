#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace scb {

/// Symmetric tridiagonal matrix: diag has n entries, off has n-1 entries
/// with off[i] = A(i, i+1) = A(i+1, i).
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const noexcept { return diag.size(); }
  std::vector<double> multiply(std::span<const double> x) const;
};

/// Solves A x = b via LDL^T. Returns nullopt if a pivot is not strictly
/// positive, i.e. A is not positive definite.
std::optional<std::vector<double>> solve_spd(const SymTridiagonal& a, std::span<const double> b);

bool is_positive_definite(const SymTridiagonal& a);

}  // namespace scb
