#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "scb/errors.hpp"
#include "scb/experiments.hpp"

namespace scb::experiments {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("not a number: '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<err::ErrorReport>& reports) {
  os << kCsvHeader << '\n';
  for (const auto& r : reports) {
    os << r.dim << ',' << format_double(r.alpha) << ',' << r.grid_id << ',' << r.calibration << ','
       << format_double(r.err_inf) << ',' << format_double(r.err_1) << ','
       << format_double(r.err_2) << ',' << format_double(r.err_mean) << '\n';
  }
}

void emit_csv(const std::vector<err::ErrorReport>& reports, const std::string& path) {
  if (reports.empty()) throw ConfigError("no reports to write");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError(path, "cannot open for writing");
  write_csv(f, reports);
  f.flush();
  if (!f) throw IoError(path, "write failed");
}

std::vector<err::ErrorReport> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) {
    throw ConfigError("missing or unexpected CSV header");
  }
  std::vector<err::ErrorReport> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto c = split(line);
    if (c.size() != 8) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 8 fields");
    }
    err::ErrorReport r;
    try {
      r.dim = static_cast<int>(parse_double(c[0]));
      r.alpha = parse_double(c[1]);
      r.grid_id = c[2];
      r.calibration = c[3];
      r.err_inf = parse_double(c[4]);
      r.err_1 = parse_double(c[5]);
      r.err_2 = parse_double(c[6]);
      r.err_mean = parse_double(c[7]);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
    r.ok = std::isfinite(r.err_2);
    out.push_back(r);
  }
  return out;
}

std::vector<err::ErrorReport> parse_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError(path, "cannot open for reading");
  try {
    return read_csv(f);
  } catch (const ConfigError& e) {
    throw IoError(path, e.what());
  }
}

}  // namespace scb::experiments
