#pragma once

#include <cmath>
#include <numbers>

namespace scb {

/// Smallest stiffness for which phi''(2) <= 0 under the paper calibration.
inline constexpr double kMinPaperAlpha = 1.0 + std::numbers::sqrt3;

enum class Calibration {
  Paper,  ///< r0 chosen so that W'(1) = 0
  Unit,   ///< r0 = 1
};

const char* to_string(Calibration c) noexcept;

/// Equilibrium shift that makes 1 the minimizer of W(r) = phi(r) + phi(2r).
double calibrate_r0(double alpha);

/// Energy shift phi0 that makes W(1) = 0 for the given alpha and r0.
double calibrate_phi0(double alpha, double r0);

/// Shifted Morse potential
///
///   phi(r) = exp(-2 alpha (r - r0)) - 2 exp(-alpha (r - r0)) - phi0
///
/// together with the 1D Cauchy-Born density W(r) = phi(r) + phi(2r) and
/// the 1D surface density gamma(F) = -phi(2F)/2. Immutable; all members are
/// pure and safe to call concurrently.
class MorseParams {
 public:
  /// r0 from calibrate_r0, phi0 from calibrate_phi0. Throws DomainError
  /// if alpha < 1 + sqrt(3).
  static MorseParams paper(double alpha);
  /// r0 = 1, phi0 from calibrate_phi0. Throws DomainError if alpha <= 0.
  static MorseParams unit(double alpha);
  static MorseParams make(Calibration c, double alpha);

  double alpha() const noexcept { return alpha_; }
  double r0() const noexcept { return r0_; }
  double phi0() const noexcept { return phi0_; }
  Calibration calibration() const noexcept { return calibration_; }

  double phi(double r) const noexcept {
    const double e = decay(r);
    return e * e - 2.0 * e - phi0_;
  }
  double dphi(double r) const noexcept {
    const double e = decay(r);
    return 2.0 * alpha_ * (e - e * e);
  }
  double ddphi(double r) const noexcept {
    const double e = decay(r);
    return 2.0 * alpha_ * alpha_ * (2.0 * e * e - e);
  }

  double W(double r) const noexcept { return phi(r) + phi(2.0 * r); }
  double dW(double r) const noexcept { return dphi(r) + 2.0 * dphi(2.0 * r); }
  double ddW(double r) const noexcept { return ddphi(r) + 4.0 * ddphi(2.0 * r); }

  double gamma(double F) const noexcept { return -0.5 * phi(2.0 * F); }
  double dgamma(double F) const noexcept { return -dphi(2.0 * F); }
  double ddgamma(double F) const noexcept { return -2.0 * ddphi(2.0 * F); }

 private:
  MorseParams(double alpha, double r0, double shift, double phi0, Calibration c)
      : alpha_(alpha), r0_(r0), shift_(shift), phi0_(phi0), calibration_(c) {}

  // exp(-alpha (r - r0)) evaluated as exp(shift - alpha (r - 1)) with
  // shift = alpha (r0 - 1) kept exactly, so r0 ~ 1 + 1e-7 loses no digits.
  double decay(double r) const noexcept { return std::exp(shift_ - alpha_ * (r - 1.0)); }

  double alpha_;
  double r0_;
  double shift_;
  double phi0_;
  Calibration calibration_;
};

/// Two-term asymptotic expansions of phi''(1), phi'(2), phi''(2) in the
/// paper calibration as alpha -> infinity.
struct AppendixExpansion {
  double ddphi1;  ///< 2 a^2 + 12 a^2 e^-a,  remainder O(a^2 e^-2a)
  double dphi2;   ///< 2 a e^-a + 2 a e^-2a, remainder O(a e^-3a)
  double ddphi2;  ///< -2 a^2 e^-a,          remainder O(a^2 e^-3a)
};

AppendixExpansion expand_appendix(double alpha);

}  // namespace scb
