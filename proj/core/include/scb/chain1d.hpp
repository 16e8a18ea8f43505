#pragma once

#include <span>
#include <vector>

#include "scb/newton.hpp"
#include "scb/potentials.hpp"
#include "scb/tridiagonal.hpp"

/// Finite atomistic chain with second-neighbour Morse interaction, written in
/// displacement-gradient coordinates u_l = y_{l+1} - y_l - 1. A chain of
/// N + 1 atoms has N bonds; both ends are free.
namespace scb::chain {

/// Per-bond displacement gradients u_0 .. u_{N-1}.
using StrainField = std::vector<double>;

/// Sum of phi(1 + u_l) over nearest bonds and phi(2 + u_l + u_{l+1}) over
/// next-nearest bonds. Throws DomainError naming the bond if 1 + u_l <= 0.
double energy(const MorseParams& p, std::span<const double> u);

std::vector<double> gradient(const MorseParams& p, std::span<const double> u);

SymTridiagonal hessian(const MorseParams& p, std::span<const double> u);

/// Linearization about u = 0 of a paper-calibrated chain of n bonds:
/// solves H(0) u = r where r is phi'(2) at both end bonds and 0 elsewhere
/// (the optimality condition with W'(1) = 0 substituted). n >= 10.
StrainField solve_linearized(const MorseParams& p, std::size_t n);

/// Solves H(0) u = rhs for an explicit right-hand side.
StrainField solve_linearized(const MorseParams& p, std::span<const double> rhs);

/// Newton iteration with backtracking line search on energy(). Bonds are
/// kept above 1 + u_l > 0.1 during the line search. Falls back to a
/// steepest-descent step when the Hessian is not positive definite.
/// Throws SolverError (with trace) after opts.max_iter iterations.
MinimizeResult<StrainField> minimize(const MorseParams& p, StrainField u0,
                                     const NewtonOptions& opts = {});

}  // namespace scb::chain
