#pragma once

#include <Eigen/Dense>
#include <vector>

namespace cvchan {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Quadrature ordering is (q1, p1, ..., qN, pN) everywhere in this library.
// Units: hbar = omega = k_B = 1, vacuum covariance = identity, so a thermal
// mode with mean photon number nbar has sigma = (2*nbar + 1) * I_2.

/// Physicality tolerance: symplectic eigenvalues must satisfy nu >= 1 - kTolPhys.
inline constexpr double kTolPhys = 1e-9;

/// Symplectic form Omega = direct sum of [[0, 1], [-1, 0]] over modes.
Matrix symplectic_form(int n_modes);

/// N-mode Gaussian state: first moments d (length 2N) and covariance sigma (2N x 2N).
/// Immutable value type; the constructor enforces matching dimensions and stores
/// sigma exactly symmetric.
struct GaussianState {
  Vector d;
  Matrix sigma;

  GaussianState(Vector first_moments, Matrix covariance);

  int n_modes() const { return static_cast<int>(d.size()) / 2; }
};

/// Product of thermal modes: d = 0, sigma = direct sum of (2*nbar_j + 1) * I_2.
GaussianState thermal_state(const std::vector<double>& nbars);

/// Single-mode thermal state displaced to first moments (q0, p0).
GaussianState displaced_thermal(double nbar, double q0, double p0);

/// Tensor product: concatenated first moments, direct-sum covariance.
GaussianState tensor(const std::vector<GaussianState>& states);

/// Symplectic spectrum: moduli of the eigenvalues of Omega * sigma, paired down
/// to N values, ascending. Values in [1 - kTolPhys, 1) are clamped to 1; anything
/// lower throws NonPhysicalStateError.
std::vector<double> symplectic_eigenvalues(const GaussianState& state);

/// Von Neumann entropy in nats from the symplectic spectrum.
double von_neumann_entropy(const GaussianState& state);

/// Per-mode mean photon numbers kbar_j = (sigma_11 + sigma_22 + d1^2 + d2^2 - 2) / 4.
std::vector<double> mean_photon_numbers(const GaussianState& state);

/// Entropy of a thermal mode: (n+1) ln(n+1) - n ln(n), zero at n = 0.
double thermal_entropy(double nbar);

/// x ln x with the continuous extension 0 at x <= 0.
double xlnx(double x);

}  // namespace cvchan
