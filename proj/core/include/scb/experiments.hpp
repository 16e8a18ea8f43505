#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "scb/errmetrics.hpp"
#include "scb/newton.hpp"
#include "scb/potentials.hpp"

namespace scb::experiments {

enum class GridFamily {
  Coarse,         ///< uniform spacing h
  BoundaryLayer,  ///< spacing h with one atomic-spacing element row at each surface
};

const char* to_string(GridFamily g) noexcept;
/// "coarse" or "layer"; throws ConfigError otherwise.
GridFamily parse_grid(const std::string& s);
Calibration parse_calibration(const std::string& s);

struct ExperimentConfig {
  int dim = 1;
  std::vector<double> alphas;
  std::vector<GridFamily> grids{GridFamily::Coarse, GridFamily::BoundaryLayer};
  Calibration calibration = Calibration::Unit;
  int chain_bonds = 30;  ///< 1D: atoms - 1
  int strip_n1 = 10;     ///< 2D strip period
  int strip_n2 = 20;     ///< 2D strip height
  int h = 5;             ///< coarse element size
  std::size_t threads = 0;  ///< 0: hardware concurrency
  NewtonOptions newton_1d = [] {
    NewtonOptions o;
    o.tol = 1e-13;
    return o;
  }();
  NewtonOptions newton_2d = [] {
    NewtonOptions o;
    o.tol = 1e-11;
    o.max_iter = 200;
    return o;
  }();

  /// Throws ConfigError for an empty sweep, non-conforming grids or alpha
  /// values outside the calibration's range.
  void validate() const;
};

/// n equally spaced values from lo to hi (n = 1 gives lo).
std::vector<double> alpha_range(double lo, double hi, std::size_t n);

/// Nonlinear atomistic, CB and SCB chains per alpha and grid. Solver
/// failures produce rows with ok = false and NaN errors.
std::vector<err::ErrorReport> run_1d(const ExperimentConfig& cfg);

/// Atomistic strip, CB and SCB finite element solutions per alpha and mesh.
std::vector<err::ErrorReport> run_2d(const ExperimentConfig& cfg);

/// Closed-form linearized fields (paper calibration) on the first n bonds of
/// the semi-infinite chain, for each alpha and first element size h0.
std::vector<err::ErrorReport> run_linearized(const std::vector<double>& alphas,
                                             const std::vector<double>& h0s,
                                             std::size_t n = 400);

/// Sorts rows by (dim, grid, calibration, alpha).
void sort_reports(std::vector<err::ErrorReport>& reports);

struct RateRow {
  std::string metric;
  int dim = 1;
  std::string grid;
  std::string calibration;
  std::size_t points = 0;
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  err::RateFit fit;
};

/// fit_rate for every (metric, series) over the largest-alpha half of the
/// series (at least 4 points). Series with fewer usable points are skipped
/// and reported in warnings.
std::vector<RateRow> summarize_rates(const std::vector<err::ErrorReport>& reports,
                                     std::vector<std::string>* warnings = nullptr);

inline constexpr const char* kCsvHeader = "dim,alpha,grid,calibration,err_inf,err_1,err_2,err_mean";

void write_csv(std::ostream& os, const std::vector<err::ErrorReport>& reports);
/// Throws ConfigError for no reports, IoError on write failure.
void emit_csv(const std::vector<err::ErrorReport>& reports, const std::string& path);

std::vector<err::ErrorReport> read_csv(std::istream& is);
/// Throws IoError (with path) when the file cannot be read or parsed.
std::vector<err::ErrorReport> parse_csv(const std::string& path);

/// Scientific notation with 17 significant digits.
std::string format_double(double x);

}  // namespace scb::experiments
