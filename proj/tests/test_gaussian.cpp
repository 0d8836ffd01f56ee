#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cvchan/errors.hpp"
#include "cvchan/gaussian.hpp"
#include "generators.hpp"

using namespace cvchan;

// frozen closed-form thermal entropies: (n+1)ln(n+1) - n ln(n)
constexpr double kEntropyThermal2 = 1.9095425048844385;
constexpr double kEntropyThermal4 = 2.5020121176909394;
constexpr double kEntropyThermal45 = 2.6077662218181055;
constexpr double kEntropyThermal5 = 2.7033672531978281;

TEST_CASE("symplectic form") {
  const Matrix omega = symplectic_form(2);
  CHECK(omega.rows() == 4);
  CHECK((omega + omega.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((omega * omega + Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("thermal_state") {
  const GaussianState vacuum = thermal_state({0.0});
  CHECK(vacuum.d.cwiseAbs().maxCoeff() == 0.0);
  CHECK((vacuum.sigma - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

  const GaussianState th4 = thermal_state({4.0});
  CHECK((th4.sigma - 9.0 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

  const GaussianState two = thermal_state({1.0, 2.0});
  Vector diag(4);
  diag << 3, 3, 5, 5;
  CHECK((two.sigma - Matrix(diag.asDiagonal())).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(thermal_state({-0.1}), std::domain_error);
  CHECK_THROWS_AS(thermal_state({}), std::invalid_argument);
}

TEST_CASE("displaced_thermal") {
  const GaussianState s = displaced_thermal(4.0, 1.0, 1.0);
  CHECK(s.d(0) == 1.0);
  CHECK(s.d(1) == 1.0);
  CHECK((s.sigma - 9.0 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

  const GaussianState vac = displaced_thermal(0.0, 0.0, 0.0);
  CHECK(vac.d.cwiseAbs().maxCoeff() == 0.0);
  CHECK((vac.sigma - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

  // displaced vacuum with |d|^2 = 4 carries one photon
  CHECK(mean_photon_numbers(displaced_thermal(0.0, 2.0, 0.0))[0] ==
        doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(displaced_thermal(-1.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("state constructor validation") {
  Vector d = Vector::Zero(2);
  CHECK_THROWS_AS(GaussianState(d, Matrix::Identity(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(GaussianState(Vector::Zero(3), Matrix::Identity(3, 3)), std::invalid_argument);
  Matrix asym(2, 2);
  asym << 1, 0.5, -0.5, 1;
  CHECK_THROWS_AS(GaussianState(d, asym), std::invalid_argument);
}

TEST_CASE("tensor") {
  const GaussianState vacuum = thermal_state({0.0});
  const GaussianState same = tensor({vacuum});
  CHECK((same.sigma - vacuum.sigma).cwiseAbs().maxCoeff() == 0.0);

  const GaussianState pair = tensor({thermal_state({1.0}), thermal_state({2.0})});
  Vector diag(4);
  diag << 3, 3, 5, 5;
  CHECK((pair.sigma - Matrix(diag.asDiagonal())).cwiseAbs().maxCoeff() == 0.0);

  const GaussianState a = displaced_thermal(1.5, 0.3, -0.7);
  const GaussianState b = displaced_thermal(0.2, -1.1, 2.0);
  const auto joint = mean_photon_numbers(tensor({a, b}));
  CHECK(joint[0] == doctest::Approx(mean_photon_numbers(a)[0]).epsilon(1e-14));
  CHECK(joint[1] == doctest::Approx(mean_photon_numbers(b)[0]).epsilon(1e-14));

  CHECK_THROWS_AS(tensor({}), std::invalid_argument);
}

TEST_CASE("symplectic_eigenvalues") {
  CHECK(symplectic_eigenvalues(thermal_state({0.0})) == std::vector<double>{1.0});
  CHECK(symplectic_eigenvalues(thermal_state({4.0}))[0] == doctest::Approx(9.0).epsilon(1e-14));

  const auto nus = symplectic_eigenvalues(thermal_state({1.0, 2.0}));
  REQUIRE(nus.size() == 2);
  CHECK(nus[0] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(nus[1] == doctest::Approx(5.0).epsilon(1e-13));

  // anisotropic but physical: nu = sqrt(4 * 1) = 2
  Matrix squeezed(2, 2);
  squeezed << 4, 0, 0, 1;
  const GaussianState s(Vector::Zero(2), squeezed);
  CHECK(symplectic_eigenvalues(s)[0] == doctest::Approx(2.0).epsilon(1e-13));

  const GaussianState bad(Vector::Zero(2), 0.5 * Matrix::Identity(2, 2));
  CHECK_THROWS_AS(symplectic_eigenvalues(bad), NonPhysicalStateError);
}

TEST_CASE("von_neumann_entropy") {
  CHECK(von_neumann_entropy(thermal_state({0.0})) == 0.0);
  CHECK(von_neumann_entropy(thermal_state({2.0})) ==
        doctest::Approx(kEntropyThermal2).epsilon(1e-13));
  CHECK(von_neumann_entropy(thermal_state({4.0})) ==
        doctest::Approx(kEntropyThermal4).epsilon(1e-13));
  CHECK_THROWS_AS(
      von_neumann_entropy(GaussianState(Vector::Zero(2), 0.2 * Matrix::Identity(2, 2))),
      NonPhysicalStateError);
}

TEST_CASE("mean_photon_numbers") {
  CHECK(mean_photon_numbers(thermal_state({0.0})) == std::vector<double>{0.0});
  CHECK(mean_photon_numbers(displaced_thermal(4.0, 1.0, 1.0))[0] == doctest::Approx(4.5));
  CHECK(mean_photon_numbers(displaced_thermal(0.0, 2.0, 0.0))[0] == doctest::Approx(1.0));
}

TEST_CASE("thermal_entropy") {
  CHECK(thermal_entropy(0.0) == 0.0);
  CHECK(thermal_entropy(5.0) == doctest::Approx(kEntropyThermal5).epsilon(1e-15));
  CHECK(thermal_entropy(4.5) == doctest::Approx(kEntropyThermal45).epsilon(1e-15));
  CHECK_THROWS_AS(thermal_entropy(-0.5), std::domain_error);
}

TEST_CASE("thermal spectra and entropies over random parameters") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> nbar(0.0, 8.0);
  std::uniform_real_distribution<double> disp(-4.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    const double n = nbar(rng);
    CHECK(symplectic_eigenvalues(thermal_state({n}))[0] ==
          doctest::Approx(2.0 * n + 1.0).epsilon(1e-12));
    CHECK(mean_photon_numbers(thermal_state({n}))[0] == doctest::Approx(n).epsilon(1e-12));
    CHECK(thermal_entropy(n) ==
          doctest::Approx(von_neumann_entropy(thermal_state({n}))).epsilon(1e-12));

    // entropy ignores first moments: sigma is untouched by displacement
    const double q = disp(rng), p = disp(rng);
    CHECK(von_neumann_entropy(displaced_thermal(n, q, p)) ==
          von_neumann_entropy(thermal_state({n})));
  }
}

TEST_CASE("entropy additivity over tensor products") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const GaussianState a = testgen::random_displaced_thermal(rng);
    const GaussianState b = testgen::random_displaced_thermal(rng);
    CHECK(von_neumann_entropy(tensor({a, b})) ==
          doctest::Approx(von_neumann_entropy(a) + von_neumann_entropy(b)).epsilon(1e-12));
  }
}
