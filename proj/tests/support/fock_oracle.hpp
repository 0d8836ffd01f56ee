#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

// Truncated-Fock-space oracle used by the test suite to verify the Gaussian
// formulas from first principles. Deliberately independent of the library's
// covariance-matrix code path: everything here is dense matrices over the
// number basis. Dictionary to phase space: q = a + a^dag, p = -i(a - a^dag),
// so a coherent displacement to first moments (q0, p0) is D(alpha) with
// alpha = (q0 + i p0) / 2.

namespace fock {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FockDensityMatrix {
  CMatrix rho;

  int dim() const { return static_cast<int>(rho.rows()); }
  double trace_deficit() const { return 1.0 - rho.trace().real(); }
};

/// Thermal state: diagonal nbar^n / (nbar+1)^(n+1).
FockDensityMatrix thermal_dm(double nbar, int dim);

/// Matrix elements of D(alpha) in the number basis (associated-Laguerre form).
CMatrix displacement_operator(Cplx alpha, int dim);

/// D(alpha) rho D(alpha)^dag with alpha = (q0 + i p0)/2; throws TruncationError
/// when the truncated operator loses more than 1e-6 of the trace.
FockDensityMatrix displacement_dm(const FockDensityMatrix& state, double q0, double p0);

/// -sum lambda ln lambda over eigenvalues >= 1e-15.
double vn_entropy_fock(const FockDensityMatrix& dm);

/// Tr[rho ln rho] - Tr[rho ln zeta]; zeta must be numerically full rank.
double relative_entropy_fock(const FockDensityMatrix& rho, const FockDensityMatrix& zeta);

struct MinimizationResult {
  double coherence;
  double kbar;  // photon number of the minimizing thermal reference
};

/// Minimize S(rho || thermal(kbar)) over the grid, then refine the interior
/// minimum by golden section to 1e-6 in kbar. A minimum on the grid boundary
/// throws (the grid must span the state's mean photon number).
MinimizationResult coherence_by_minimization(const FockDensityMatrix& dm,
                                             const std::vector<double>& kbar_grid);

double mean_photon(const FockDensityMatrix& dm);

/// (<q>, <p>) via quadrature-operator traces.
std::pair<double, double> first_moments(const FockDensityMatrix& dm);

}  // namespace fock
