#include "cvchan/channels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "cvchan/errors.hpp"

namespace cvchan {

namespace {

void require_nonnegative(double value, const char* name) {
  if (value < 0.0)
    throw std::domain_error(std::string(name) + " must be >= 0, got " + std::to_string(value));
}

GcpMap isotropic_single_mode(double f, double g) {
  return {f * Matrix::Identity(2, 2), g * Matrix::Identity(2, 2)};
}

}  // namespace

GcpMap::GcpMap(Matrix f, Matrix g) : F(std::move(f)), G(std::move(g)) {
  const auto n = F.rows();
  if (n < 2 || n % 2 != 0 || F.cols() != n)
    throw std::invalid_argument("GcpMap: F must be square with even dimension >= 2");
  if (G.rows() != n || G.cols() != n)
    throw std::invalid_argument("GcpMap: G dimensions do not match F");
  const double scale = std::max(1.0, G.cwiseAbs().maxCoeff());
  if ((G - G.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw std::invalid_argument("GcpMap: G is not symmetric");
  G = ((G + G.transpose()) / 2.0).eval();
}

GcpMap identity_map(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("identity_map: n_modes must be positive");
  return {Matrix::Identity(2 * n_modes, 2 * n_modes), Matrix::Zero(2 * n_modes, 2 * n_modes)};
}

GcpMap attenuation(double theta, double mbar) {
  require_nonnegative(mbar, "attenuation: mbar");
  const double th = std::remainder(theta, 2.0 * M_PI);  // periodic in theta
  const double c = std::cos(th);
  const double s2 = std::sin(th) * std::sin(th);
  return isotropic_single_mode(c, (2.0 * mbar + 1.0) * s2);
}

GcpMap amplification(double r, double mbar) {
  require_nonnegative(r, "amplification: r");
  require_nonnegative(mbar, "amplification: mbar");
  const double sh = std::sinh(r);
  return isotropic_single_mode(std::cosh(r), (2.0 * mbar + 1.0) * sh * sh);
}

GcpMap quantum_limited_attenuator(double theta) { return attenuation(theta, 0.0); }

GcpMap quantum_limited_amplifier(double r) { return amplification(r, 0.0); }

GcpMap phase_insensitive(double theta, double r) {
  require_nonnegative(r, "phase_insensitive: r");
  const double th = std::remainder(theta, 2.0 * M_PI);
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const double s2 = std::sin(th) * std::sin(th);
  return isotropic_single_mode(ch * std::cos(th), ch * ch * s2 + sh * sh);
}

GcpMap thermalization_map(double t, double gamma, double nbar_reservoir) {
  require_nonnegative(t, "thermalization_map: t");
  if (gamma <= 0.0)
    throw std::domain_error("thermalization_map: gamma must be > 0, got " + std::to_string(gamma));
  require_nonnegative(nbar_reservoir, "thermalization_map: Nbar");
  const double decay = std::exp(-gamma * t);
  return isotropic_single_mode(std::exp(-gamma * t / 2.0),
                               (2.0 * nbar_reservoir + 1.0) * (1.0 - decay));
}

GcpMap compose(const GcpMap& outer, const GcpMap& inner) {
  if (outer.n_modes() != inner.n_modes())
    throw std::invalid_argument("compose: mode counts differ");
  GcpMap result(outer.F * inner.F, outer.F * inner.G * outer.F.transpose() + outer.G);
  if (auto check = validate_cp(result); !check.ok)
    throw CpViolationError("compose: result violates complete positivity (min eigenvalue " +
                               std::to_string(check.min_eigenvalue) + ")",
                           check.min_eigenvalue);
  return result;
}

GcpMap embed_single_mode(const GcpMap& map, int mode_index, int n_modes) {
  if (map.n_modes() != 1)
    throw std::invalid_argument("embed_single_mode: map must act on one mode");
  if (mode_index < 0 || mode_index >= n_modes)
    throw std::invalid_argument("embed_single_mode: mode index " + std::to_string(mode_index) +
                                " out of range for " + std::to_string(n_modes) + " modes");
  Matrix f = Matrix::Identity(2 * n_modes, 2 * n_modes);
  Matrix g = Matrix::Zero(2 * n_modes, 2 * n_modes);
  f.block(2 * mode_index, 2 * mode_index, 2, 2) = map.F;
  g.block(2 * mode_index, 2 * mode_index, 2, 2) = map.G;
  return {std::move(f), std::move(g)};
}

CpCheck validate_cp(const GcpMap& map) {
  const Matrix omega = symplectic_form(map.n_modes());
  const Matrix f_omega_ft = map.F * omega * map.F.transpose();
  // G + i*Omega - i*F*Omega*F^T is Hermitian (G symmetric, the rest antisymmetric)
  Eigen::MatrixXcd herm =
      map.G.cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) * (omega - f_omega_ft).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig >= -kTolCp, min_eig};
}

GaussianState apply(const GcpMap& map, const GaussianState& state) {
  if (map.n_modes() != state.n_modes())
    throw std::invalid_argument("apply: map acts on " + std::to_string(map.n_modes()) +
                                " modes, state has " + std::to_string(state.n_modes()));
  if (auto check = validate_cp(map); !check.ok)
    throw CpViolationError("apply: map violates complete positivity (min eigenvalue " +
                               std::to_string(check.min_eigenvalue) + ")",
                           check.min_eigenvalue);
  GaussianState out(map.F * state.d, map.F * state.sigma * map.F.transpose() + map.G);
  symplectic_eigenvalues(out);  // a non-physical output signals a CP/tolerance bug
  return out;
}

}  // namespace cvchan
