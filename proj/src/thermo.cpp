#include "cvchan/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cvchan {

ThermalReservoir::ThermalReservoir(double nbar_, double gamma_) : nbar(nbar_), gamma(gamma_) {
  if (nbar < 0.0)
    throw std::domain_error("ThermalReservoir: Nbar must be >= 0, got " + std::to_string(nbar));
  if (gamma <= 0.0)
    throw std::domain_error("ThermalReservoir: gamma must be > 0, got " + std::to_string(gamma));
}

double ThermalReservoir::beta() const { return beta_from_nbar(nbar); }

double internal_energy(const GaussianState& state, EnergyConvention convention) {
  double energy = state.sigma.trace() / 4.0;
  if (convention == EnergyConvention::full) energy += state.d.squaredNorm() / 4.0;
  return energy;
}

GaussianState thermalize(const GaussianState& state, const ThermalReservoir& reservoir,
                         double t) {
  GcpMap single = thermalization_map(t, reservoir.gamma, reservoir.nbar);
  const int n = state.n_modes();
  if (n == 1) return apply(single, state);
  GcpMap map(Matrix::Identity(2 * n, 2 * n), Matrix::Zero(2 * n, 2 * n));
  for (int j = 0; j < n; ++j) {
    map.F.block(2 * j, 2 * j, 2, 2) = single.F;
    map.G.block(2 * j, 2 * j, 2, 2) = single.G;
  }
  return apply(map, state);
}

EntropyRecord entropy_production(const GaussianState& state_tau1,
                                 const ThermalReservoir& reservoir, double t,
                                 EnergyConvention convention) {
  const double beta = reservoir.beta();  // throws for Nbar = 0
  const GaussianState state_tau2 = thermalize(state_tau1, reservoir, t);
  EntropyRecord record;
  record.t = t;
  record.delta_U =
      internal_energy(state_tau2, convention) - internal_energy(state_tau1, convention);
  record.delta_S = von_neumann_entropy(state_tau2) - von_neumann_entropy(state_tau1);
  record.sigma_prod = -beta * record.delta_U + record.delta_S;
  return record;
}

double relative_entropy_to_gibbs(const GaussianState& state, double beta,
                                 EnergyConvention convention) {
  if (beta <= 0.0)
    throw std::domain_error("relative_entropy_to_gibbs: beta must be > 0, got " +
                            std::to_string(beta));
  const double free_energy_per_mode = std::log(2.0 * std::sinh(beta / 2.0)) / beta;
  const double free_energy = state.n_modes() * free_energy_per_mode;
  return beta * (internal_energy(state, convention) - free_energy) - von_neumann_entropy(state);
}

double beta_from_nbar(double nbar) {
  if (nbar <= 0.0)
    throw std::domain_error("beta_from_nbar: Nbar must be > 0, got " + std::to_string(nbar));
  return std::log1p(1.0 / nbar);
}

double nbar_from_beta(double beta) {
  if (beta <= 0.0)
    throw std::domain_error("nbar_from_beta: beta must be > 0, got " + std::to_string(beta));
  return 1.0 / std::expm1(beta);
}

double thermalization_time(const GaussianState& state, const ThermalReservoir& reservoir,
                           double tol) {
  if (tol <= 0.0)
    throw std::domain_error("thermalization_time: tol must be > 0, got " + std::to_string(tol));
  const Matrix sigma_eq =
      (2.0 * reservoir.nbar + 1.0) * Matrix::Identity(state.d.size(), state.d.size());
  const auto distance = [&](double t) {
    const GaussianState evolved = thermalize(state, reservoir, t);
    return std::max((evolved.sigma - sigma_eq).cwiseAbs().maxCoeff(), evolved.d.norm());
  };
  if (distance(0.0) < tol) return 0.0;
  // geometric bracketing; the decay is exponential so this always terminates
  double hi = 1e-3;
  while (distance(hi) >= tol) {
    hi *= 2.0;
    if (hi > 1e12) return hi;  // unreachable for finite states, keeps the loop bounded
  }
  double lo = hi / 2.0;
  if (hi == 1e-3) lo = 0.0;
  while (hi - lo > 1e-3) {
    const double mid = (lo + hi) / 2.0;
    (distance(mid) < tol ? hi : lo) = mid;
  }
  return hi;
}

GaussianState channel_output(const ChannelProtocol& protocol) {
  const GaussianState input = displaced_thermal(protocol.nbar, protocol.q0, protocol.p0);
  const GcpMap map = protocol.family == ChannelFamily::attenuation
                         ? attenuation(protocol.param, protocol.mbar)
                         : amplification(protocol.param, protocol.mbar);
  return apply(map, input);
}

double coherence_entropy_cost(const ChannelProtocol& protocol, const ThermalReservoir& reservoir,
                              double t, EnergyConvention convention) {
  ChannelProtocol reference = protocol;
  reference.param =
      protocol.family == ChannelFamily::attenuation ? M_PI / 2.0 : protocol.r_max;
  const double sigma_run =
      entropy_production(channel_output(protocol), reservoir, t, convention).sigma_prod;
  const double sigma_ref =
      entropy_production(channel_output(reference), reservoir, t, convention).sigma_prod;
  return sigma_run - sigma_ref;
}

}  // namespace cvchan
