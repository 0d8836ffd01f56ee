#pragma once

#include "cvchan/gaussian.hpp"

namespace cvchan {

/// Slack allowed on the CP condition; quantum-limited channels sit exactly on
/// the boundary, so a strict >= 0 test would fail on rounding.
inline constexpr double kTolCp = 1e-9;

/// Gaussian completely-positive map acting as d -> F d, sigma -> F sigma F^T + G,
/// with G + i*Omega - i*F*Omega*F^T >= 0.
struct GcpMap {
  Matrix F;
  Matrix G;

  GcpMap(Matrix f, Matrix g);

  int n_modes() const { return static_cast<int>(F.rows()) / 2; }
};

struct CpCheck {
  bool ok;
  double min_eigenvalue;  // smallest eigenvalue of G + i*Omega - i*F*Omega*F^T
};

GcpMap identity_map(int n_modes);

/// Beam-splitter mixing with a thermal environment of mbar photons;
/// transmissivity tau = cos^2(theta). F = cos(theta) I, G = (2*mbar+1) sin^2(theta) I.
GcpMap attenuation(double theta, double mbar);

/// Two-mode-squeezing gain g = cosh^2(r) with environment noise mbar.
/// F = cosh(r) I, G = (2*mbar+1) sinh^2(r) I.
GcpMap amplification(double r, double mbar);

GcpMap quantum_limited_attenuator(double theta);
GcpMap quantum_limited_amplifier(double r);

/// Single-mode phase-insensitive channel: quantum-limited amplifier after
/// quantum-limited attenuator. F = cosh(r) cos(theta) I,
/// G = (cosh^2(r) sin^2(theta) + sinh^2(r)) I.
GcpMap phase_insensitive(double theta, double r);

/// Exact Gaussian solution of thermal Lindblad dynamics after time t:
/// F = exp(-gamma t / 2) I, G = (2*Nbar+1) (1 - exp(-gamma t)) I.
GcpMap thermalization_map(double t, double gamma, double nbar_reservoir);

/// compose(outer, inner): inner acts first.
GcpMap compose(const GcpMap& outer, const GcpMap& inner);

/// Lift a single-mode map to mode j of an N-mode system (identity elsewhere).
GcpMap embed_single_mode(const GcpMap& map, int mode_index, int n_modes);

CpCheck validate_cp(const GcpMap& map);

/// Apply the map. Refuses maps failing validate_cp and verifies the output is
/// physical rather than propagating garbage.
GaussianState apply(const GcpMap& map, const GaussianState& state);

}  // namespace cvchan
