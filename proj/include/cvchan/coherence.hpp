#pragma once

#include <utility>
#include <vector>

#include "cvchan/gaussian.hpp"

namespace cvchan {

/// Entropic coherence of a Gaussian state relative to the nearest thermal
/// reference: C(rho) = S(zeta) - S(rho), where zeta is the thermal state with
/// the same per-mode mean photon numbers.
struct CoherenceReport {
  std::vector<double> kbars;  // reference photon numbers, one per mode
  double entropy_state;       // S(rho), nats
  double entropy_reference;   // S(zeta), nats
  double coherence;           // entropy_reference - entropy_state
};

/// The minimizing incoherent state: thermal_state(mean_photon_numbers(state)).
GaussianState reference_thermal(const GaussianState& state);

CoherenceReport coherence(const GaussianState& state);

/// True when the state is a tensor product of thermal modes: |d| and the
/// off-diagonal / anisotropic parts of sigma all below tol.
bool is_thermal_product(const GaussianState& state, double tol = 1e-9);

/// Closed form for the coherence of an attenuation-channel output, input being
/// a displaced thermal state (nbar, q0, p0) and environment mbar.
double coherence_att_closed_form(double nbar, double mbar, double theta, double q0, double p0);

/// Amplification-channel counterpart (cosh/sinh in place of cos/sin).
double coherence_amp_closed_form(double nbar, double mbar, double r, double q0, double p0);

/// r -> 0 limit of the amplification coherence; equals the input coherence.
double coherence_amp_limit_r0(double nbar, double q0, double p0);

/// r -> infinity limit: ln(q0^2 + p0^2 + 4(n+m+1)) - ln(n+m+1) - 2 ln 2.
double coherence_amp_limit_rinf(double nbar, double mbar, double q0, double p0);

/// N-mode generalizations; every mode sees the same theta (or r) but may have
/// its own nbar_j, mbar_j and displacement (q_j, p_j).
double coherence_att_nmode(const std::vector<double>& nbars, const std::vector<double>& mbars,
                           double theta, const std::vector<std::pair<double, double>>& d0);
double coherence_amp_nmode(const std::vector<double>& nbars, const std::vector<double>& mbars,
                           double r, const std::vector<std::pair<double, double>>& d0);

}  // namespace cvchan
