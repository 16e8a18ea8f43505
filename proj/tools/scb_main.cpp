// scb: error studies of Cauchy-Born and surface Cauchy-Born models against
// the atomistic Morse chain and triangular strip.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scb/errors.hpp"
#include "scb/experiments.hpp"
#include "scb/lattice2d/mesh.hpp"
#include "scb/lattice2d/strip.hpp"

namespace ex = scb::experiments;

namespace {

struct SweepFlags {
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  std::size_t alpha_steps = 0;
  std::string grid = "both";
  std::string calibration;
  std::string out;
  bool strict = false;
  std::size_t threads = 0;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--alpha-min", f.alpha_min, "smallest alpha")->capture_default_str();
  cmd->add_option("--alpha-max", f.alpha_max, "largest alpha")->capture_default_str();
  cmd->add_option("--alpha-steps", f.alpha_steps, "number of alpha values")->capture_default_str();
  cmd->add_option("--grid", f.grid, "grid family: coarse, layer or both")
      ->check(CLI::IsMember({"coarse", "layer", "both"}))
      ->capture_default_str();
  cmd->add_option("--calibration", f.calibration, "potential calibration: paper or unit")
      ->check(CLI::IsMember({"paper", "unit"}))
      ->capture_default_str();
  cmd->add_option("--out", f.out, "CSV output path (default: stdout)");
  cmd->add_flag("--strict", f.strict, "exit nonzero if any solve fails");
  cmd->add_option("--threads", f.threads, "worker threads (0: all cores)")->capture_default_str();
}

ex::ExperimentConfig make_config(int dim, const SweepFlags& f) {
  ex::ExperimentConfig cfg;
  cfg.dim = dim;
  cfg.alphas = ex::alpha_range(f.alpha_min, f.alpha_max, f.alpha_steps);
  cfg.calibration = ex::parse_calibration(f.calibration);
  if (f.grid != "both") cfg.grids = {ex::parse_grid(f.grid)};
  cfg.threads = f.threads;
  return cfg;
}

void write_reports(const std::vector<scb::err::ErrorReport>& rows, const std::string& out) {
  if (out.empty()) {
    ex::write_csv(std::cout, rows);
  } else {
    ex::emit_csv(rows, out);
  }
}

int finish(const std::vector<scb::err::ErrorReport>& rows, const SweepFlags& f) {
  write_reports(rows, f.out);
  int failed = 0;
  for (const auto& r : rows) {
    if (!r.ok) {
      ++failed;
      std::cerr << "scb: solve failed (dim " << r.dim << ", grid " << r.grid_id << ", alpha "
                << r.alpha << "): " << r.message << '\n';
    }
  }
  return failed > 0 && f.strict ? 2 : 0;
}

int rates(const std::string& path, const std::string& out) {
  std::vector<std::string> warnings;
  const auto rows = ex::summarize_rates(ex::parse_csv(path), &warnings);
  for (const auto& w : warnings) std::cerr << "scb: warning: " << w << '\n';

  std::ofstream file;
  if (!out.empty()) {
    file.open(out, std::ios::binary);
    if (!file) throw scb::IoError(out, "cannot open for writing");
  }
  std::ostream& os = out.empty() ? std::cout : file;
  os << "metric,dim,grid,calibration,points,alpha_lo,alpha_hi,slope,intercept,r2\n";
  for (const auto& r : rows) {
    os << r.metric << ',' << r.dim << ',' << r.grid << ',' << r.calibration << ',' << r.points
       << ',' << ex::format_double(r.alpha_lo) << ',' << ex::format_double(r.alpha_hi) << ','
       << ex::format_double(r.fit.slope) << ',' << ex::format_double(r.fit.intercept) << ','
       << ex::format_double(r.fit.r2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surface Cauchy-Born error studies"};
  app.require_subcommand(1);

  SweepFlags f1{2.0, 7.0, 11, "both", "unit", "", false, 0};
  auto* run1 = app.add_subcommand("run-1d", "nonlinear chain: atomistic vs CB vs SCB");
  add_sweep_flags(run1, f1);
  int chain_bonds = 30;
  run1->add_option("--bonds", chain_bonds, "chain length in bonds (atoms - 1)")->capture_default_str();

  SweepFlags f2{4.0, 8.0, 9, "both", "paper", "", false, 0};
  auto* run2 = app.add_subcommand("run-2d", "triangular strip: atomistic vs CB vs SCB finite elements");
  add_sweep_flags(run2, f2);
  int n1 = 10, n2 = 20;
  run2->add_option("--n1", n1, "strip period")->capture_default_str();
  run2->add_option("--n2", n2, "strip height")->capture_default_str();

  SweepFlags fl{6.0, 14.0, 9, "both", "paper", "", false, 0};
  auto* lin = app.add_subcommand("linearized-table", "closed-form linearized chain errors, h0 = 1 and 5");
  lin->add_option("--alpha-min", fl.alpha_min)->capture_default_str();
  lin->add_option("--alpha-max", fl.alpha_max)->capture_default_str();
  lin->add_option("--alpha-steps", fl.alpha_steps)->capture_default_str();
  lin->add_option("--out", fl.out, "CSV output path (default: stdout)");

  std::string csv_path, rates_out;
  auto* rate = app.add_subcommand("rates", "fit exponential rates to a results CSV");
  rate->add_option("csv", csv_path, "results CSV")->required();
  rate->add_option("--out", rates_out, "output path (default: stdout)");

  int mesh_h = 5;
  bool mesh_layer = false;
  std::string dump_out;
  auto* dmesh = app.add_subcommand("dump-mesh", "write a finite element mesh as text");
  dmesh->add_option("--n1", n1)->capture_default_str();
  dmesh->add_option("--n2", n2)->capture_default_str();
  dmesh->add_option("--element-size", mesh_h, "coarse element size h")->capture_default_str();
  dmesh->add_flag("--layer", mesh_layer, "boundary layer mesh");
  dmesh->add_option("--out", dump_out);
  auto* dlat = app.add_subcommand("dump-lattice", "write the lattice strip as text");
  dlat->add_option("--n1", n1)->capture_default_str();
  dlat->add_option("--n2", n2)->capture_default_str();
  dlat->add_option("--out", dump_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run1) {
      auto cfg = make_config(1, f1);
      cfg.chain_bonds = chain_bonds;
      return finish(ex::run_1d(cfg), f1);
    }
    if (*run2) {
      auto cfg = make_config(2, f2);
      cfg.strip_n1 = n1;
      cfg.strip_n2 = n2;
      return finish(ex::run_2d(cfg), f2);
    }
    if (*lin) {
      const auto rows =
          ex::run_linearized(ex::alpha_range(fl.alpha_min, fl.alpha_max, fl.alpha_steps), {1.0, 5.0});
      return finish(rows, fl);
    }
    if (*rate) return rates(csv_path, rates_out);
    if (*dmesh || *dlat) {
      std::ofstream file;
      if (!dump_out.empty()) {
        file.open(dump_out);
        if (!file) throw scb::IoError(dump_out, "cannot open for writing");
      }
      std::ostream& os = dump_out.empty() ? std::cout : file;
      if (*dmesh) {
        scb::lattice2d::write_mesh(os, scb::lattice2d::build_mesh(n1, n2, mesh_h, mesh_layer));
      } else {
        scb::lattice2d::write_lattice(os, scb::lattice2d::LatticeStrip2D(n1, n2));
      }
      return 0;
    }
  } catch (const scb::IoError& e) {
    std::cerr << "scb: I/O error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "scb: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
