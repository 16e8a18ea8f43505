#include "scb/potentials.hpp"

#include <string>

#include "scb/errors.hpp"

namespace scb {
namespace {

// alpha (r0 - 1) for the paper calibration.
double paper_shift(double alpha) {
  return std::log1p(2.0 * std::exp(-alpha)) - std::log1p(2.0 * std::exp(-2.0 * alpha));
}

double raw_morse(double alpha, double shift, double r) {
  const double e = std::exp(shift - alpha * (r - 1.0));
  return e * e - 2.0 * e;
}

void require_positive(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("Morse stiffness must be positive and finite, got " + std::to_string(alpha));
  }
}

}  // namespace

const char* to_string(Calibration c) noexcept {
  return c == Calibration::Paper ? "paper" : "unit";
}

double calibrate_r0(double alpha) {
  require_positive(alpha);
  return 1.0 + paper_shift(alpha) / alpha;
}

double calibrate_phi0(double alpha, double r0) {
  require_positive(alpha);
  const double shift = alpha * (r0 - 1.0);
  return 0.5 * (raw_morse(alpha, shift, 1.0) + raw_morse(alpha, shift, 2.0));
}

MorseParams MorseParams::paper(double alpha) {
  require_positive(alpha);
  if (alpha < kMinPaperAlpha) {
    throw DomainError("paper calibration requires alpha >= 1 + sqrt(3), got " +
                      std::to_string(alpha));
  }
  const double shift = paper_shift(alpha);
  const double phi0 = 0.5 * (raw_morse(alpha, shift, 1.0) + raw_morse(alpha, shift, 2.0));
  return MorseParams(alpha, 1.0 + shift / alpha, shift, phi0, Calibration::Paper);
}

MorseParams MorseParams::unit(double alpha) {
  require_positive(alpha);
  return MorseParams(alpha, 1.0, 0.0, calibrate_phi0(alpha, 1.0), Calibration::Unit);
}

MorseParams MorseParams::make(Calibration c, double alpha) {
  return c == Calibration::Paper ? paper(alpha) : unit(alpha);
}

AppendixExpansion expand_appendix(double alpha) {
  require_positive(alpha);
  const double e1 = std::exp(-alpha);
  const double e2 = std::exp(-2.0 * alpha);
  const double a2 = alpha * alpha;
  return {2.0 * a2 + 12.0 * a2 * e1, 2.0 * alpha * e1 + 2.0 * alpha * e2, -2.0 * a2 * e1};
}

}  // namespace scb
