// Acceptance suite: every release-gate check runs here, one pass/fail line
// each. Exit code is the number of failed checks.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cvchan/channels.hpp"
#include "cvchan/coherence.hpp"
#include "cvchan/pipeline.hpp"
#include "cvchan/sweep.hpp"
#include "cvchan/thermo.hpp"
#include "fock_oracle.hpp"
#include "generators.hpp"

using namespace cvchan;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

std::string num(double v) { return format_sig12(v); }

constexpr double kTargetCoherence = 0.105754;      // C(displaced_thermal(4,1,1))
constexpr double kLn11 = 0.0953101798043249;       // ln(1.1)
constexpr double kTargetSigma = 0.246860;          // Fig. 3 complete-thermalization plateau

// 1. the reference coherence value three independent ways
void initial_coherence_three_ways() {
  const double generic = coherence(displaced_thermal(4.0, 1.0, 1.0)).coherence;
  const double closed = coherence_att_closed_form(4.0, 0.0, 0.0, 1.0, 1.0);
  const double limit = coherence_amp_limit_r0(4.0, 1.0, 1.0);
  require(std::abs(generic - kTargetCoherence) < 1e-5, "generic path off: " + num(generic));
  require(std::abs(closed - kTargetCoherence) < 1e-5, "closed form off: " + num(closed));
  require(std::abs(limit - kTargetCoherence) < 1e-5, "r->0 limit off: " + num(limit));
  require(std::abs(generic - closed) < 1e-10 && std::abs(generic - limit) < 1e-10 &&
              std::abs(closed - limit) < 1e-10,
          "the three routes disagree beyond 1e-10");
}

// 2. explicit Fock-space minimization finds the same coherence and reference
void fock_oracle_equivalence() {
  const auto rho = fock::displacement_dm(fock::thermal_dm(4.0, 100), 1.0, 1.0);
  std::vector<double> grid(36);
  for (int i = 0; i < 36; ++i) grid[i] = 3.0 + 3.5 * i / 35.0;
  const auto result = fock::coherence_by_minimization(rho, grid);
  const double gaussian = coherence(displaced_thermal(4.0, 1.0, 1.0)).coherence;
  require(std::abs(result.coherence - gaussian) < 1e-2,
          "oracle coherence " + num(result.coherence) + " vs gaussian " + num(gaussian));
  require(std::abs(result.kbar - 4.5) < 1e-2, "minimizing kbar " + num(result.kbar));
}

// 3. attenuation sweep shape: maxima at 0, pi, 2pi; zeros at pi/2, 3pi/2;
//    noise ordering near pi
void attenuation_figure_shape() {
  const CoherenceSweepConfig config = default_coherence_sweep(ChannelFamily::attenuation);
  const CoherenceSweepResult result = run_coherence_sweep(config);
  const double c_max = result.input_coherence;
  for (std::size_t series = 0; series < config.mbars.size(); ++series) {
    const CoherenceRow* rows = &result.rows[series * config.steps];
    require(std::abs(rows[0].coherence - c_max) < 1e-10, "C(0) is not the input coherence");
    require(std::abs(rows[200].coherence - c_max) < 1e-10, "C(2pi) is not the input coherence");
    require(std::abs(rows[100].coherence - c_max) < 1e-10, "C(pi) is not the input coherence");
    require(std::abs(rows[50].coherence) < 1e-12, "C(pi/2) not zero");
    require(std::abs(rows[150].coherence) < 1e-12, "C(3pi/2) not zero");
  }
  for (double theta : {M_PI - 0.3, M_PI + 0.3}) {
    double previous = coherence_att_closed_form(4.0, 0.0, theta, 1.0, 1.0);
    for (double m : {2.0, 4.0}) {
      const double current = coherence_att_closed_form(4.0, m, theta, 1.0, 1.0);
      require(current <= previous + 1e-12, "coherence not nonincreasing in m near pi");
      previous = current;
    }
  }
}

// 4. amplification asymptote ln(1.1) at m = 0, decreasing in m
void amplification_asymptote() {
  const double at_r10 = coherence_amp_closed_form(4.0, 0.0, 10.0, 1.0, 1.0);
  require(std::abs(at_r10 - kLn11) < 1e-6, "C(r=10) = " + num(at_r10));
  double previous = coherence_amp_limit_rinf(4.0, 0.0, 1.0, 1.0);
  for (double m : {2.0, 4.0}) {
    const double current = coherence_amp_limit_rinf(4.0, m, 1.0, 1.0);
    require(current < previous, "asymptote not decreasing in m");
    previous = current;
  }
}

// 5. highly thermal inputs: no coherence dynamics
void high_temperature_vanishing() {
  for (int i = 0; i <= 40; ++i) {
    const double theta = 2.0 * M_PI * i / 40.0;
    const double r = 6.0 * i / 40.0;
    for (double m : {0.0, 2.0, 4.0}) {
      require(std::abs(coherence_att_closed_form(1e4, m, theta, 1.0, 1.0)) < 1e-3,
              "attenuation coherence too large at nbar = 1e4");
      require(std::abs(coherence_amp_closed_form(1e4, m, r, 1.0, 1.0)) < 1e-3,
              "amplification coherence too large at nbar = 1e4");
    }
  }
}

// 6. Fig. 3 entropy production plateau, identical under both conventions
void entropy_production_number() {
  const ThermalReservoir res(5.0, 0.1);
  ChannelProtocol protocol;  // nbar=1, mbar=2, d0=(1,1)
  protocol.param = M_PI / 2.0;
  const GaussianState state = channel_output(protocol);
  const double t_complete = thermalization_time(state, res, 1e-6);
  const double full =
      entropy_production(state, res, t_complete, EnergyConvention::full).sigma_prod;
  const double cov =
      entropy_production(state, res, t_complete, EnergyConvention::covariance_only).sigma_prod;
  require(std::abs(full - kTargetSigma) < 1e-4, "sigma (full) = " + num(full));
  require(std::abs(cov - kTargetSigma) < 1e-4, "sigma (covariance) = " + num(cov));
  require(std::abs(full - cov) < 1e-12, "conventions differ with d = 0");
}

// 7. second law and monotone growth over the figure protocols
void second_law_and_monotonicity() {
  const ThermalReservoir res(5.0, 0.1);
  std::vector<ChannelProtocol> protocols(4);
  protocols[0].param = 0.0;
  protocols[1].param = M_PI / 2.0;
  protocols[2].family = ChannelFamily::amplification;
  protocols[2].param = 0.0;
  protocols[3].family = ChannelFamily::amplification;
  protocols[3].param = 0.5;
  for (const auto& protocol : protocols) {
    const GaussianState state = channel_output(protocol);
    double previous = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double t = 60.0 * i / 199.0;
      const double sigma = entropy_production(state, res, t, EnergyConvention::full).sigma_prod;
      require(sigma >= -1e-10, "second law violated at t = " + num(t));
      require(sigma >= previous - 1e-12, "sigma(t) decreased at t = " + num(t));
      previous = sigma;
    }
  }
}

// 8. parameter-sweep shapes: attenuation minima at pi/2 or 3pi/2; amplification
//    interior minimum with sigma(5) > sigma(2)
void figure_shapes_over_parameters() {
  const ThermalReservoir res(5.0, 0.1);
  ChannelProtocol protocol;
  const double t_th =
      thermalization_time(channel_output([] {
                            ChannelProtocol p;
                            p.param = 0.0;
                            return p;
                          }()),
                          res, 1e-6);
  for (double t : {5.0, t_th}) {
    EntropySweepConfig config = default_entropy_sweep(ChannelFamily::attenuation);
    config.mode = SweepMode::param;
    config.t = t;
    const EntropySweepResult sweep = run_entropy_sweep(config);
    std::size_t argmin = 0;
    for (std::size_t i = 1; i < sweep.rows.size(); ++i)
      if (sweep.rows[i].sigma_prod < sweep.rows[argmin].sigma_prod) argmin = i;
    const double step = 2.0 * M_PI / (config.steps - 1);
    const double dist = std::min(std::abs(sweep.rows[argmin].x - M_PI / 2.0),
                                 std::abs(sweep.rows[argmin].x - 3.0 * M_PI / 2.0));
    require(dist <= step + 1e-12, "attenuation argmin off the zero-coherence angles");
  }

  protocol.family = ChannelFamily::amplification;
  const auto sigma_at = [&](double r, double t) {
    protocol.param = r;
    return entropy_production(channel_output(protocol), res, t, EnergyConvention::full)
        .sigma_prod;
  };
  for (double t : {5.0, 60.0}) {
    std::vector<double> values;
    for (int i = 0; i <= 120; ++i) values.push_back(sigma_at(6.0 * i / 120.0, t));
    std::size_t argmin = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
      if (values[i] < values[argmin]) argmin = i;
    require(argmin > 0 && argmin < values.size() - 1, "no interior minimum in r");
    require(values.front() > values[argmin], "sigma(0) should exceed the minimum");
    require(sigma_at(5.0, t) > sigma_at(2.0, t), "sigma(5) <= sigma(2)");
  }
}

// 9. -beta dU + dS equals the relative-entropy decrease
void appendix_identity() {
  std::mt19937 rng(90);
  std::uniform_real_distribution<double> time(0.0, 50.0);
  std::uniform_real_distribution<double> res_nbar(0.5, 8.0);
  for (int i = 0; i < 100; ++i) {
    const GaussianState s = testgen::random_displaced_thermal(rng);
    const ThermalReservoir res(res_nbar(rng), 0.1);
    const double t = time(rng);
    for (EnergyConvention convention :
         {EnergyConvention::full, EnergyConvention::covariance_only}) {
      const double direct = entropy_production(s, res, t, convention).sigma_prod;
      const double via_gibbs =
          relative_entropy_to_gibbs(s, res.beta(), convention) -
          relative_entropy_to_gibbs(thermalize(s, res, t), res.beta(), convention);
      require(std::abs(direct - via_gibbs) < 1e-12,
              "identity off by " + num(direct - via_gibbs));
    }
  }
}

// 10. channel algebra: factorization of the phase-insensitive channel and the
//     CP validator's accept/reject behavior
void channel_algebra() {
  std::mt19937 rng(100);
  std::uniform_real_distribution<double> theta(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> r(0.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double th = theta(rng), rr = r(rng);
    const GcpMap direct = phase_insensitive(th, rr);
    const GcpMap chained = compose(quantum_limited_amplifier(rr), quantum_limited_attenuator(th));
    require((direct.F - chained.F).cwiseAbs().maxCoeff() < 1e-12, "F factorization off");
    require((direct.G - chained.G).cwiseAbs().maxCoeff() < 1e-12, "G factorization off");
  }
  for (int i = 0; i < 100; ++i)
    require(validate_cp(testgen::random_constructor_map(rng)).ok,
            "constructor map rejected by the CP validator");
  const CpCheck bad = validate_cp(GcpMap(2.0 * Matrix::Identity(2, 2), Matrix::Zero(2, 2)));
  require(!bad.ok, "F = 2I, G = 0 accepted");
  require(std::abs(bad.min_eigenvalue + 3.0) < 1e-9,
          "min eigenvalue " + num(bad.min_eigenvalue) + " != -3");
}

// 11. closed forms against the generic map-then-measure path, including 3-mode
void closed_form_generic_equivalence() {
  std::mt19937 rng(110);
  std::uniform_real_distribution<double> nbar(0.0, 6.0);
  std::uniform_real_distribution<double> theta(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> r(0.0, 3.0);
  std::uniform_real_distribution<double> disp(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double n = nbar(rng), m = nbar(rng), q = disp(rng), p = disp(rng);
    const double th = theta(rng), rr = r(rng);
    const GaussianState input = displaced_thermal(n, q, p);
    require(std::abs(coherence_att_closed_form(n, m, th, q, p) -
                     coherence(apply(attenuation(th, m), input)).coherence) < 1e-10,
            "attenuation closed form off");
    require(std::abs(coherence_amp_closed_form(n, m, rr, q, p) -
                     coherence(apply(amplification(rr, m), input)).coherence) < 1e-10,
            "amplification closed form off");
  }
  for (int i = 0; i < 20; ++i) {
    std::vector<double> ns, ms;
    std::vector<std::pair<double, double>> d0;
    std::vector<GaussianState> modes;
    for (int j = 0; j < 3; ++j) {
      ns.push_back(nbar(rng));
      ms.push_back(nbar(rng));
      d0.emplace_back(disp(rng), disp(rng));
      modes.push_back(displaced_thermal(ns[j], d0[j].first, d0[j].second));
    }
    const double th = theta(rng), rr = r(rng);
    GaussianState att_state = tensor(modes);
    GaussianState amp_state = tensor(modes);
    for (int j = 0; j < 3; ++j) {
      att_state = apply(embed_single_mode(attenuation(th, ms[j]), j, 3), att_state);
      amp_state = apply(embed_single_mode(amplification(rr, ms[j]), j, 3), amp_state);
    }
    require(std::abs(coherence_att_nmode(ns, ms, th, d0) - coherence(att_state).coherence) <
                1e-10,
            "3-mode attenuation closed form off");
    require(std::abs(coherence_amp_nmode(ns, ms, rr, d0) - coherence(amp_state).coherence) <
                1e-10,
            "3-mode amplification closed form off");
  }
}

// 12. DSL: print/parse identity, fuzz safety, positioned errors
void dsl_robustness() {
  std::mt19937 rng(120);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> positive(0.0, 3.0);
  std::uniform_int_distribution<int> kind(0, 6);
  std::uniform_int_distribution<int> count(1, 5);
  for (int i = 0; i < 200; ++i) {
    PipelineSpec spec;
    const int n = count(rng);
    for (int j = 0; j < n; ++j) {
      switch (kind(rng)) {
        case 0: spec.stages.push_back(AttStage{angle(rng), positive(rng)}); break;
        case 1: spec.stages.push_back(AmpStage{positive(rng), positive(rng)}); break;
        case 2: spec.stages.push_back(QlaStage{angle(rng)}); break;
        case 3: spec.stages.push_back(QlampStage{positive(rng)}); break;
        case 4: spec.stages.push_back(PhaseStage{angle(rng), positive(rng)}); break;
        case 5:
          spec.stages.push_back(ThermStage{positive(rng), positive(rng), 0.1 + positive(rng)});
          break;
        default: spec.stages.push_back(DisplaceStage{positive(rng), -positive(rng)}); break;
      }
    }
    require(parse_pipeline(print_pipeline(spec)) == spec, "round trip failed");
  }

  std::uniform_int_distribution<int> length(0, 48);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 300; ++i) {
    std::string text;
    const int n = length(rng);
    for (int j = 0; j < n; ++j) text.push_back(static_cast<char>(byte(rng)));
    try {
      parse_pipeline(text);
    } catch (const ParseError& e) {
      require(e.line() >= 1 && e.column() >= 1, "error without a position");
    }
  }
  for (const char* bad : {"att(theta=1", "att(theta=1, theta=2)", "nope(x=1)", "att(m=1)", ""})
    try {
      parse_pipeline(bad);
      require(false, std::string("accepted malformed input: ") + bad);
    } catch (const ParseError& e) {
      require(e.line() >= 1 && e.column() >= 1, "error without a position");
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
      {"initial coherence, three independent routes", initial_coherence_three_ways},
      {"Fock-oracle coherence minimization", fock_oracle_equivalence},
      {"attenuation coherence figure shape", attenuation_figure_shape},
      {"amplification asymptote ln(1.1)", amplification_asymptote},
      {"high-temperature coherence vanishes", high_temperature_vanishing},
      {"entropy production plateau 0.246860", entropy_production_number},
      {"second law and monotone growth", second_law_and_monotonicity},
      {"entropy-production figure shapes", figure_shapes_over_parameters},
      {"relative-entropy identity", appendix_identity},
      {"channel algebra and CP validation", channel_algebra},
      {"closed-form vs generic coherence", closed_form_generic_equivalence},
      {"pipeline DSL robustness", dsl_robustness},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i].second();
      std::printf("PASS [%2zu/%zu] %s\n", i + 1, criteria.size(), criteria[i].first);
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL [%2zu/%zu] %s: %s\n", i + 1, criteria.size(), criteria[i].first, e.what());
    }
  }
  std::printf("acceptance: %zu passed, %d failed\n", criteria.size() - failures, failures);
  return failures;
}
