#include "cvchan/coherence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cvchan {

namespace {

void require_nonnegative(double value, const char* name) {
  if (value < 0.0)
    throw std::domain_error(std::string(name) + " must be >= 0, got " + std::to_string(value));
}

// One-mode coherence from the output symplectic eigenvalue A and the reference
// photon number kbar = B - 1; both closed forms reduce to
// [B ln B - (B-1) ln(B-1)] - [(A+1)/2 ln((A+1)/2) - (A-1)/2 ln((A-1)/2)],
// i.e. a difference of thermal entropies.
double closed_form_from_ab(double a, double kbar) {
  // clamp rounding residue: a = cos^2 + sin^2 can land one ulp below 1
  return thermal_entropy(std::max(0.0, kbar)) - thermal_entropy(std::max(0.0, (a - 1.0) / 2.0));
}

// Shared N-mode evaluation; c2/s2 are cos^2/sin^2 (attenuation) or
// cosh^2/sinh^2 (amplification).
double nmode_coherence(const std::vector<double>& nbars, const std::vector<double>& mbars,
                       const std::vector<std::pair<double, double>>& d0, double c2, double s2) {
  if (nbars.size() != mbars.size() || nbars.size() != d0.size())
    throw std::invalid_argument("n-mode coherence: per-mode lists differ in length");
  if (nbars.empty()) throw std::invalid_argument("n-mode coherence: need at least one mode");
  double total = 0.0;
  for (std::size_t j = 0; j < nbars.size(); ++j) {
    require_nonnegative(nbars[j], "nbar");
    require_nonnegative(mbars[j], "mbar");
    const double nu = (2.0 * nbars[j] + 1.0) * c2 + (2.0 * mbars[j] + 1.0) * s2;
    const double disp2 = d0[j].first * d0[j].first + d0[j].second * d0[j].second;
    const double kbar = nu / 2.0 + (c2 * disp2 - 2.0) / 4.0;
    total += thermal_entropy(kbar) - mode_entropy(nu);
  }
  return total;
}

}  // namespace

GaussianState reference_thermal(const GaussianState& state) {
  return thermal_state(mean_photon_numbers(state));
}

CoherenceReport coherence(const GaussianState& state) {
  CoherenceReport report;
  report.kbars = mean_photon_numbers(state);
  report.entropy_state = von_neumann_entropy(state);
  report.entropy_reference = 0.0;
  for (double k : report.kbars) report.entropy_reference += thermal_entropy(k);
  report.coherence = report.entropy_reference - report.entropy_state;
  return report;
}

bool is_thermal_product(const GaussianState& state, double tol) {
  if (state.d.cwiseAbs().maxCoeff() > tol) return false;
  const int n = static_cast<int>(state.d.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      if (std::abs(state.sigma(i, j)) > tol) return false;
  }
  for (int j = 0; j < n; j += 2)
    if (std::abs(state.sigma(j, j) - state.sigma(j + 1, j + 1)) > tol) return false;
  return true;
}

double coherence_att_closed_form(double nbar, double mbar, double theta, double q0, double p0) {
  require_nonnegative(nbar, "coherence_att_closed_form: nbar");
  require_nonnegative(mbar, "coherence_att_closed_form: mbar");
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double a = (2.0 * nbar + 1.0) * c2 + (2.0 * mbar + 1.0) * s2;
  const double b = a / 2.0 + (q0 * q0 + p0 * p0) * c2 / 4.0 + 0.5;
  return closed_form_from_ab(a, b);
}

double coherence_amp_closed_form(double nbar, double mbar, double r, double q0, double p0) {
  require_nonnegative(nbar, "coherence_amp_closed_form: nbar");
  require_nonnegative(mbar, "coherence_amp_closed_form: mbar");
  require_nonnegative(r, "coherence_amp_closed_form: r");
  const double ch2 = std::cosh(r) * std::cosh(r);
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double a = (2.0 * nbar + 1.0) * ch2 + (2.0 * mbar + 1.0) * sh2;
  const double b = a / 2.0 + (q0 * q0 + p0 * p0) * ch2 / 4.0 + 0.5;
  return closed_form_from_ab(a, b);
}

double coherence_amp_limit_r0(double nbar, double q0, double p0) {
  require_nonnegative(nbar, "coherence_amp_limit_r0: nbar");
  const double disp2 = q0 * q0 + p0 * p0;
  const auto a_ln_b = [](double a, double b) { return a == 0.0 ? 0.0 : a * std::log(b); };
  return xlnx(nbar) - xlnx(nbar + 1.0) +
         (nbar + 1.0 + disp2 / 4.0) * std::log(disp2 + 4.0 * nbar + 4.0) -
         a_ln_b(nbar + disp2 / 4.0, disp2 + 4.0 * nbar) - 2.0 * std::log(2.0);
}

double coherence_amp_limit_rinf(double nbar, double mbar, double q0, double p0) {
  require_nonnegative(nbar, "coherence_amp_limit_rinf: nbar");
  require_nonnegative(mbar, "coherence_amp_limit_rinf: mbar");
  const double disp2 = q0 * q0 + p0 * p0;
  return std::log(disp2 + 4.0 * (nbar + mbar + 1.0)) - std::log(nbar + mbar + 1.0) -
         2.0 * std::log(2.0);
}

double coherence_att_nmode(const std::vector<double>& nbars, const std::vector<double>& mbars,
                           double theta, const std::vector<std::pair<double, double>>& d0) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return nmode_coherence(nbars, mbars, d0, c * c, s * s);
}

double coherence_amp_nmode(const std::vector<double>& nbars, const std::vector<double>& mbars,
                           double r, const std::vector<std::pair<double, double>>& d0) {
  require_nonnegative(r, "coherence_amp_nmode: r");
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  return nmode_coherence(nbars, mbars, d0, ch * ch, sh * sh);
}

}  // namespace cvchan
