#include "scb/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <thread>
#include <tuple>

#include "scb/chain1d.hpp"
#include "scb/continuum1d.hpp"
#include "scb/errors.hpp"
#include "scb/lattice2d/cauchy_born.hpp"
#include "scb/lattice2d/error2d.hpp"
#include "scb/lattice2d/minimize.hpp"
#include "scb/linearized.hpp"

namespace scb::experiments {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Job {
  double alpha;
  GridFamily grid;
};

err::ErrorReport blank_row(int dim, const Job& job, const ExperimentConfig& cfg) {
  err::ErrorReport r;
  r.dim = dim;
  r.alpha = job.alpha;
  r.h0 = job.grid == GridFamily::Coarse ? cfg.h : 1.0;
  r.grid_id = to_string(job.grid);
  r.calibration = to_string(cfg.calibration);
  return r;
}

void mark_failed(err::ErrorReport& r, const std::exception& e) {
  r.ok = false;
  r.message = e.what();
  r.err_inf = r.err_1 = r.err_2 = r.err_mean = kNaN;
}

// Runs fn over jobs on up to cfg.threads workers; output order follows jobs.
template <class Fn>
std::vector<err::ErrorReport> run_jobs(const std::vector<Job>& jobs, std::size_t threads, Fn fn) {
  std::vector<err::ErrorReport> out(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, jobs.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = fn(jobs[i]);
    return out;
  }
  std::vector<std::future<void>> workers;
  for (std::size_t w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < jobs.size(); i += threads) out[i] = fn(jobs[i]);
    }));
  }
  for (auto& f : workers) f.get();
  return out;
}

std::vector<Job> make_jobs(const ExperimentConfig& cfg) {
  std::vector<Job> jobs;
  for (GridFamily g : cfg.grids)
    for (double a : cfg.alphas) jobs.push_back({a, g});
  return jobs;
}

continuum::Grid1D grid_1d(const ExperimentConfig& cfg, GridFamily g) {
  return g == GridFamily::Coarse ? continuum::Grid1D::uniform(cfg.chain_bonds, cfg.h)
                                 : continuum::Grid1D::boundary_layer(cfg.chain_bonds, cfg.h);
}

err::ErrorReport solve_1d(const ExperimentConfig& cfg, const Job& job) {
  err::ErrorReport r = blank_row(1, job, cfg);
  try {
    const MorseParams p = MorseParams::make(cfg.calibration, job.alpha);
    const continuum::Grid1D g = grid_1d(cfg, job.grid);
    const auto n = static_cast<std::size_t>(cfg.chain_bonds);
    const auto atom = chain::minimize(p, chain::StrainField(n, 0.0), cfg.newton_1d);
    const auto cb = continuum::minimize_cb(p, g, continuum::P0Field(g.elements(), 0.0), cfg.newton_1d);
    const auto scb = continuum::minimize_scb(p, g, cb.solution, cfg.newton_1d);
    err::fill_errors(r, err::p0_to_lattice(g, scb.solution), atom.solution,
                     err::p0_to_lattice(g, cb.solution));
  } catch (const std::exception& e) {
    mark_failed(r, e);
  }
  return r;
}

err::ErrorReport solve_2d(const ExperimentConfig& cfg, const Job& job) {
  using namespace lattice2d;
  err::ErrorReport r = blank_row(2, job, cfg);
  try {
    const MorseParams p = MorseParams::make(cfg.calibration, job.alpha);
    const LatticeStrip2D strip(cfg.strip_n1, cfg.strip_n2);
    const FEMesh2D mesh =
        build_mesh(cfg.strip_n1, cfg.strip_n2, cfg.h, job.grid == GridFamily::BoundaryLayer);
    Mat2 F = Mat2::Identity();
    F(1, 1) = cb_equilibrium_stretch(p);
    const auto atom = relax_atomistic(p, strip, strip.affine(F), cfg.newton_2d);
    const auto cb = relax_fe(p, mesh, mesh.affine(F), false, cfg.newton_2d);
    const auto scb = relax_fe(p, mesh, cb.solution, true, cfg.newton_2d);
    const Error2D e = err2d(scb.solution, cb.solution, atom.solution, strip, mesh);
    r.err_inf = e.err_inf;
    r.err_1 = e.err_1;
    r.err_2 = e.err_2;
    r.err_mean = e.err_mean;
  } catch (const std::exception& e) {
    mark_failed(r, e);
  }
  return r;
}

}  // namespace

const char* to_string(GridFamily g) noexcept {
  return g == GridFamily::Coarse ? "coarse" : "layer";
}

GridFamily parse_grid(const std::string& s) {
  if (s == "coarse") return GridFamily::Coarse;
  if (s == "layer") return GridFamily::BoundaryLayer;
  throw ConfigError("unknown grid family '" + s + "' (expected coarse or layer)");
}

Calibration parse_calibration(const std::string& s) {
  if (s == "paper") return Calibration::Paper;
  if (s == "unit") return Calibration::Unit;
  throw ConfigError("unknown calibration '" + s + "' (expected paper or unit)");
}

void ExperimentConfig::validate() const {
  if (dim != 1 && dim != 2) throw ConfigError("dimension must be 1 or 2");
  if (alphas.empty()) throw ConfigError("empty alpha sweep");
  if (grids.empty()) throw ConfigError("no grid family selected");
  for (double a : alphas) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("alpha must be positive and finite");
    if (calibration == Calibration::Paper && a < kMinPaperAlpha) {
      throw ConfigError("alpha = " + format_double(a) + " is below 1 + sqrt(3), the range of the paper calibration");
    }
  }
  if (h < 2) throw ConfigError("element size h must be >= 2");
  if (dim == 1 && (chain_bonds % h != 0 || chain_bonds < 2 * h)) {
    throw ConfigError("chain length must be a multiple of h, at least 2h");
  }
  if (dim == 2 && (strip_n1 % h != 0 || strip_n2 % h != 0 || strip_n2 < 2 * h)) {
    throw ConfigError("strip dimensions must be multiples of h, height at least 2h");
  }
}

std::vector<double> alpha_range(double lo, double hi, std::size_t n) {
  if (n == 0) throw ConfigError("alpha sweep needs at least one step");
  if (hi < lo) throw ConfigError("alpha-max is below alpha-min");
  std::vector<double> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return a;
}

std::vector<err::ErrorReport> run_1d(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  c.dim = 1;
  c.validate();
  auto out = run_jobs(make_jobs(c), c.threads, [&](const Job& j) { return solve_1d(c, j); });
  sort_reports(out);
  return out;
}

std::vector<err::ErrorReport> run_2d(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  c.dim = 2;
  c.validate();
  auto out = run_jobs(make_jobs(c), c.threads, [&](const Job& j) { return solve_2d(c, j); });
  sort_reports(out);
  return out;
}

std::vector<err::ErrorReport> run_linearized(const std::vector<double>& alphas,
                                             const std::vector<double>& h0s, std::size_t n) {
  if (alphas.empty() || h0s.empty()) throw ConfigError("empty linearized sweep");
  std::vector<err::ErrorReport> out;
  const std::vector<double> zero(n, 0.0);
  for (double h0 : h0s) {
    for (double a : alphas) {
      err::ErrorReport r;
      r.alpha = a;
      r.h0 = h0;
      r.grid_id = "lin-h" + std::to_string(static_cast<long long>(std::lround(h0)));
      r.calibration = to_string(Calibration::Paper);
      try {
        const MorseParams p = MorseParams::paper(a);
        const auto scb = linearized::scb_closed_form(p, h0).lattice_field(n);
        const auto atom = linearized::atomistic_solution(p).lattice_field(n);
        err::fill_errors(r, scb, atom, zero);
      } catch (const std::exception& e) {
        mark_failed(r, e);
      }
      out.push_back(r);
    }
  }
  sort_reports(out);
  return out;
}

void sort_reports(std::vector<err::ErrorReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.dim, a.grid_id, a.calibration, a.alpha) <
           std::tie(b.dim, b.grid_id, b.calibration, b.alpha);
  });
}

std::vector<RateRow> summarize_rates(const std::vector<err::ErrorReport>& reports,
                                     std::vector<std::string>* warnings) {
  using Key = std::tuple<int, std::string, std::string>;
  std::map<Key, std::vector<const err::ErrorReport*>> series;
  for (const auto& r : reports) series[{r.dim, r.grid_id, r.calibration}].push_back(&r);

  static constexpr std::pair<const char*, double err::ErrorReport::*> metrics[] = {
      {"err_inf", &err::ErrorReport::err_inf},
      {"err_1", &err::ErrorReport::err_1},
      {"err_2", &err::ErrorReport::err_2},
      {"err_mean", &err::ErrorReport::err_mean},
  };

  std::vector<RateRow> out;
  for (auto& [key, rows] : series) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto* a, const auto* b) { return a->alpha < b->alpha; });
    for (const auto& [name, field] : metrics) {
      std::vector<double> a, e;
      for (const auto* r : rows) {
        const double v = r->*field;
        if (r->ok && std::isfinite(v) && v > 0.0) {
          a.push_back(r->alpha);
          e.push_back(v);
        }
      }
      const std::string label = std::string(name) + " dim=" + std::to_string(std::get<0>(key)) +
                                " grid=" + std::get<1>(key) + " calibration=" + std::get<2>(key);
      const std::size_t k = std::max<std::size_t>(4, (a.size() + 1) / 2);
      if (a.size() < k) {
        if (warnings) {
          warnings->push_back("skipping " + label + ": " + std::to_string(a.size()) +
                              " usable points, need 4");
        }
        continue;
      }
      const std::size_t first = a.size() - k;
      RateRow row;
      row.metric = name;
      row.dim = std::get<0>(key);
      row.grid = std::get<1>(key);
      row.calibration = std::get<2>(key);
      row.points = k;
      row.alpha_lo = a[first];
      row.alpha_hi = a.back();
      row.fit = err::fit_rate(std::span(a).subspan(first), std::span(e).subspan(first));
      out.push_back(row);
    }
  }
  return out;
}

}  // namespace scb::experiments
