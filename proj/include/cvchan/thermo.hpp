#pragma once

#include "cvchan/channels.hpp"
#include "cvchan/gaussian.hpp"

namespace cvchan {

/// Markovian thermal reservoir: mean photon number Nbar and decay rate gamma.
struct ThermalReservoir {
  double nbar;
  double gamma;

  ThermalReservoir(double nbar, double gamma);

  /// Inverse temperature beta = ln(1 + 1/Nbar); requires nbar > 0.
  double beta() const;
};

/// Internal energy convention. covariance_only is the literal Tr[sigma]/4;
/// full adds the first-moment energy |d|^2/4 so that U = <H> with
/// H = (q^2 + p^2)/4 per mode. Both are reported; full is the default.
enum class EnergyConvention { covariance_only, full };

struct EntropyRecord {
  double t;
  double delta_U;     // U(rho_tau2) - U(rho_tau1)
  double delta_S;     // S(rho_tau2) - S(rho_tau1), nats
  double sigma_prod;  // -beta * delta_U + delta_S
};

double internal_energy(const GaussianState& state, EnergyConvention convention);

/// Evolve the state for time t under the reservoir's thermalization map.
GaussianState thermalize(const GaussianState& state, const ThermalReservoir& reservoir, double t);

/// Entropy production of thermalizing state_tau1 for time t.
EntropyRecord entropy_production(const GaussianState& state_tau1, const ThermalReservoir& reservoir,
                                 double t, EnergyConvention convention);

/// beta * [U(state) - F_eq(beta)] - S(state), with the per-mode equilibrium
/// free energy F_eq = ln(2 sinh(beta/2)) / beta.
double relative_entropy_to_gibbs(const GaussianState& state, double beta,
                                 EnergyConvention convention);

double beta_from_nbar(double nbar);
double nbar_from_beta(double beta);

/// Smallest t (to within 1e-3) with max|sigma_t - sigma_eq| < tol and |d_t| < tol;
/// geometric search followed by bisection.
double thermalization_time(const GaussianState& state, const ThermalReservoir& reservoir,
                           double tol);

enum class ChannelFamily { attenuation, amplification };

/// The channel-then-thermalize protocol: a displaced thermal input
/// (nbar, q0, p0) sent through an attenuation (param = theta) or amplification
/// (param = r) channel with environment mbar. r_max stands in for the
/// r -> infinity reference point of the amplification family.
struct ChannelProtocol {
  ChannelFamily family = ChannelFamily::attenuation;
  double nbar = 1.0;
  double mbar = 2.0;
  double q0 = 1.0;
  double p0 = 1.0;
  double param = 0.0;
  double r_max = 10.0;
};

/// The state rho_tau1 produced by the protocol's channel.
GaussianState channel_output(const ChannelProtocol& protocol);

/// Entropy-production cost of the coherence carried by rho_tau1:
/// Sigma(param) - Sigma(param0), where param0 = pi/2 for attenuation and
/// r_max for amplification, both runs sharing reservoir and t.
double coherence_entropy_cost(const ChannelProtocol& protocol, const ThermalReservoir& reservoir,
                              double t, EnergyConvention convention);

}  // namespace cvchan
