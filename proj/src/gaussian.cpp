#include "cvchan/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cvchan/errors.hpp"

namespace cvchan {

Matrix symplectic_form(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("symplectic_form: n_modes must be positive");
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int j = 0; j < n_modes; ++j) {
    omega(2 * j, 2 * j + 1) = 1.0;
    omega(2 * j + 1, 2 * j) = -1.0;
  }
  return omega;
}

GaussianState::GaussianState(Vector first_moments, Matrix covariance)
    : d(std::move(first_moments)), sigma(std::move(covariance)) {
  const auto n = d.size();
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("GaussianState: first moments must have even length >= 2");
  if (sigma.rows() != n || sigma.cols() != n)
    throw std::invalid_argument("GaussianState: covariance dimensions do not match first moments");
  const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw std::invalid_argument("GaussianState: covariance matrix is not symmetric");
  // store exactly symmetric, killing rounding asymmetry from F*sigma*F^T products
  sigma = ((sigma + sigma.transpose()) / 2.0).eval();
}

GaussianState thermal_state(const std::vector<double>& nbars) {
  if (nbars.empty()) throw std::invalid_argument("thermal_state: need at least one mode");
  const int n = static_cast<int>(nbars.size());
  Vector d = Vector::Zero(2 * n);
  Matrix sigma = Matrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    if (nbars[j] < 0.0)
      throw std::domain_error("thermal_state: mean photon number must be >= 0, got " +
                              std::to_string(nbars[j]));
    sigma(2 * j, 2 * j) = sigma(2 * j + 1, 2 * j + 1) = 2.0 * nbars[j] + 1.0;
  }
  return {std::move(d), std::move(sigma)};
}

GaussianState displaced_thermal(double nbar, double q0, double p0) {
  if (nbar < 0.0)
    throw std::domain_error("displaced_thermal: mean photon number must be >= 0, got " +
                            std::to_string(nbar));
  Vector d(2);
  d << q0, p0;
  return {std::move(d), (2.0 * nbar + 1.0) * Matrix::Identity(2, 2)};
}

GaussianState tensor(const std::vector<GaussianState>& states) {
  if (states.empty()) throw std::invalid_argument("tensor: empty state list");
  int total = 0;
  for (const auto& s : states) total += 2 * s.n_modes();
  Vector d = Vector::Zero(total);
  Matrix sigma = Matrix::Zero(total, total);
  int offset = 0;
  for (const auto& s : states) {
    const int k = static_cast<int>(s.d.size());
    d.segment(offset, k) = s.d;
    sigma.block(offset, offset, k, k) = s.sigma;
    offset += k;
  }
  return {std::move(d), std::move(sigma)};
}

std::vector<double> symplectic_eigenvalues(const GaussianState& state) {
  const int n = state.n_modes();
  Eigen::EigenSolver<Matrix> solver(symplectic_form(n) * state.sigma, false);
  std::vector<double> moduli(2 * n);
  for (int i = 0; i < 2 * n; ++i) moduli[i] = std::abs(solver.eigenvalues()[i]);
  std::sort(moduli.begin(), moduli.end());
  // eigenvalues of Omega*sigma come in +/- i*nu pairs; adjacent after sorting
  std::vector<double> nus(n);
  for (int j = 0; j < n; ++j) {
    double nu = moduli[2 * j];
    if (nu < 1.0 - kTolPhys)
      throw NonPhysicalStateError("non-physical state: symplectic eigenvalue " +
                                  std::to_string(nu) + " below 1");
    nus[j] = std::max(nu, 1.0);
  }
  return nus;
}

double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double von_neumann_entropy(const GaussianState& state) {
  // per mode: (nu+1)/2 ln((nu+1)/2) - (nu-1)/2 ln((nu-1)/2) = thermal_entropy((nu-1)/2)
  double entropy = 0.0;
  for (double nu : symplectic_eigenvalues(state)) entropy += thermal_entropy((nu - 1.0) / 2.0);
  return entropy;
}

std::vector<double> mean_photon_numbers(const GaussianState& state) {
  const int n = state.n_modes();
  std::vector<double> kbars(n);
  for (int j = 0; j < n; ++j) {
    const double qq = state.sigma(2 * j, 2 * j);
    const double pp = state.sigma(2 * j + 1, 2 * j + 1);
    const double dq = state.d(2 * j);
    const double dp = state.d(2 * j + 1);
    double k = (qq + pp + dq * dq + dp * dp - 2.0) / 4.0;
    if (k < 0.0) {
      if (k < -kTolPhys)
        throw NonPhysicalStateError("non-physical state: mean photon number " +
                                    std::to_string(k) + " in mode " + std::to_string(j));
      k = 0.0;
    }
    kbars[j] = k;
  }
  return kbars;
}

double thermal_entropy(double nbar) {
  if (nbar < 0.0)
    throw std::domain_error("thermal_entropy: mean photon number must be >= 0, got " +
                            std::to_string(nbar));
  if (nbar < 1e-6) return xlnx(nbar + 1.0) - xlnx(nbar);
  // grouped as ln(n+1) + n ln(1 + 1/n): no cancellation for large n, where the
  // two terms of the direct form grow like n ln n but differ only by ~ln n
  return std::log(nbar + 1.0) + nbar * std::log1p(1.0 / nbar);
}

}  // namespace cvchan
