#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cvchan/coherence.hpp"
#include "cvchan/errors.hpp"
#include "cvchan/pipeline.hpp"
#include "cvchan/sweep.hpp"
#include "cvchan/version.hpp"

namespace {

using namespace cvchan;

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitInternalError = 2;

ChannelFamily parse_family(const std::string& name) {
  if (name == "att") return ChannelFamily::attenuation;
  if (name == "amp") return ChannelFamily::amplification;
  throw std::invalid_argument("unknown channel '" + name + "' (expected att or amp)");
}

EnergyConvention parse_convention(const std::string& name) {
  if (name == "full") return EnergyConvention::full;
  if (name == "covariance") return EnergyConvention::covariance_only;
  throw std::invalid_argument("unknown energy convention '" + name +
                              "' (expected full or covariance)");
}

std::pair<double, double> parse_d_flag(const std::vector<double>& d) {
  if (d.size() != 2) throw std::invalid_argument("--d expects two values: q,p");
  return {d[0], d[1]};
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  return out;
}

struct CommonFlags {
  std::string channel = "att";
  std::vector<double> d = {1.0, 1.0};
  std::string out_path;
  std::string svg_path;
};

int cmd_coherence_sweep(const CommonFlags& common, double nbar, std::vector<double> mbars,
                        std::optional<double> param_min, std::optional<double> param_max,
                        std::optional<int> steps, bool normalize) {
  CoherenceSweepConfig config = default_coherence_sweep(parse_family(common.channel));
  config.nbar = nbar;
  if (!mbars.empty()) config.mbars = std::move(mbars);
  std::tie(config.q0, config.p0) = parse_d_flag(common.d);
  if (param_min) config.param_min = *param_min;
  if (param_max) config.param_max = *param_max;
  if (steps) config.steps = *steps;

  const CoherenceSweepResult result = run_coherence_sweep(config);
  if (!common.out_path.empty()) {
    auto out = open_output(common.out_path);
    write_coherence_csv(out, config, result);
  } else {
    write_coherence_csv(std::cout, config, result);
  }
  if (!common.svg_path.empty()) {
    auto svg = open_output(common.svg_path);
    const char* param_label = config.family == ChannelFamily::attenuation ? "theta" : "r";
    write_svg(svg, normalize ? "normalized coherence" : "coherence", param_label,
              normalize ? "C / C_in" : "C (nats)",
              coherence_svg_series(config, result, normalize));
  }
  return kExitOk;
}

int cmd_entropy_sweep(const CommonFlags& common, const std::string& mode, double nbar,
                      std::vector<double> mbars, double reservoir_nbar, double gamma,
                      const std::string& energy, std::optional<double> param,
                      std::optional<double> param_min, std::optional<double> param_max,
                      std::optional<int> steps, std::optional<double> t,
                      std::optional<double> t_max, double r_max) {
  EntropySweepConfig config = default_entropy_sweep(parse_family(common.channel));
  if (mode == "time")
    config.mode = SweepMode::time;
  else if (mode == "param")
    config.mode = SweepMode::param;
  else
    throw std::invalid_argument("unknown mode '" + mode + "' (expected time or param)");
  config.nbar = nbar;
  if (!mbars.empty()) {
    if (mbars.size() != 1)
      throw std::invalid_argument("entropy-sweep takes a single --m value");
    config.mbar = mbars[0];
  }
  std::tie(config.q0, config.p0) = parse_d_flag(common.d);
  config.reservoir_nbar = reservoir_nbar;
  config.gamma = gamma;
  config.convention = parse_convention(energy);
  if (param) config.param = *param;
  if (param_min) config.param_min = *param_min;
  if (param_max) config.param_max = *param_max;
  if (steps) config.steps = *steps;
  if (t) config.t = *t;
  if (t_max) config.t_max = *t_max;
  config.r_max = r_max;

  const EntropySweepResult result = run_entropy_sweep(config);
  if (!common.out_path.empty()) {
    auto out = open_output(common.out_path);
    write_entropy_csv(out, config, result);
  } else {
    write_entropy_csv(std::cout, config, result);
  }
  if (!common.svg_path.empty()) {
    auto svg = open_output(common.svg_path);
    const char* x_label = config.mode == SweepMode::time
                              ? "t"
                              : (config.family == ChannelFamily::attenuation ? "theta" : "r");
    write_svg(svg, "entropy production", x_label, "<Sigma> (nats)",
              entropy_svg_series(config, result));
  }
  return kExitOk;
}

int cmd_run(const std::string& pipeline_text, double nbar, const std::vector<double>& d) {
  const PipelineSpec spec = parse_pipeline(pipeline_text);
  const auto [q0, p0] = parse_d_flag(d);
  const GaussianState output = evaluate(spec, displaced_thermal(nbar, q0, p0));
  std::cout << run_report_json(output);
  return kExitOk;
}

int cmd_validate(const std::string& pipeline_text) {
  PipelineSpec spec;
  try {
    spec = parse_pipeline(pipeline_text);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUserError;
  }
  bool ok = true;
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    const auto map = std::visit(
        [](const auto& s) -> std::optional<GcpMap> {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, AttStage>) return attenuation(s.theta, s.mbar);
          else if constexpr (std::is_same_v<T, AmpStage>) return amplification(s.r, s.mbar);
          else if constexpr (std::is_same_v<T, QlaStage>) return quantum_limited_attenuator(s.theta);
          else if constexpr (std::is_same_v<T, QlampStage>) return quantum_limited_amplifier(s.r);
          else if constexpr (std::is_same_v<T, PhaseStage>) return phase_insensitive(s.theta, s.r);
          else if constexpr (std::is_same_v<T, ThermStage>)
            return thermalization_map(s.t, s.gamma, s.nbar);
          else return std::nullopt;  // displacement shifts d only; nothing to validate
        },
        spec.stages[i]);
    if (!map) continue;
    if (const CpCheck check = validate_cp(*map); !check.ok) {
      std::cerr << "stage " << i + 1 << " violates complete positivity (min eigenvalue "
                << format_sig12(check.min_eigenvalue) << ")\n";
      ok = false;
    }
  }
  return ok ? kExitOk : kExitUserError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-insensitive Gaussian channels: coherence and entropy production"};
  app.set_version_flag("--version", std::string(cvchan::kToolName) + " " + cvchan::kVersion);
  app.require_subcommand(1);

  CommonFlags common;
  double nbar_sweep = 4.0;
  std::vector<double> mbars;
  std::optional<double> param_min, param_max, param, t, t_max;
  std::optional<int> steps;
  bool normalize = false;

  auto* coh = app.add_subcommand("coherence-sweep", "Coherence of channel outputs over a grid");
  coh->add_option("--channel", common.channel, "att|amp")->default_str("att");
  coh->add_option("--n", nbar_sweep, "input mean photon number")->default_val(4.0);
  coh->add_option("--m", mbars, "environment photon numbers (comma list)")->delimiter(',');
  coh->add_option("--d", common.d, "input first moments q,p")->delimiter(',')->expected(1, 2);
  coh->add_option("--param-min", param_min, "grid start");
  coh->add_option("--param-max", param_max, "grid end");
  coh->add_option("--steps", steps, "grid points (>= 2)");
  coh->add_flag("--normalize", normalize, "plot normalized coherence in the SVG");
  coh->add_option("--out", common.out_path, "CSV output path (default: stdout)");
  coh->add_option("--svg", common.svg_path, "SVG output path");

  std::string mode = "time";
  double nbar_ep = 1.0, reservoir_nbar = 5.0, gamma = 0.1, r_max = 10.0;
  std::string energy = "full";
  auto* ep = app.add_subcommand("entropy-sweep", "Entropy production of channel-then-thermalize");
  ep->add_option("--channel", common.channel, "att|amp")->default_str("att");
  ep->add_option("--mode", mode, "time|param")->default_str("time");
  ep->add_option("--n", nbar_ep, "input mean photon number")->default_val(1.0);
  ep->add_option("--m", mbars, "environment photon number")->delimiter(',');
  ep->add_option("--d", common.d, "input first moments q,p")->delimiter(',')->expected(1, 2);
  ep->add_option("--N", reservoir_nbar, "reservoir photon number")->default_val(5.0);
  ep->add_option("--gamma", gamma, "reservoir decay rate")->default_val(0.1);
  ep->add_option("--energy", energy, "full|covariance")->default_str("full");
  ep->add_option("--param", param, "fixed theta/r in time mode");
  ep->add_option("--param-min", param_min, "grid start (param mode)");
  ep->add_option("--param-max", param_max, "grid end (param mode)");
  ep->add_option("--steps", steps, "grid points (>= 2)");
  ep->add_option("--t", t, "fixed time in param mode (default: thermalization time)");
  ep->add_option("--t-max", t_max, "time-grid end in time mode");
  ep->add_option("--r-max", r_max, "amplification reference point")->default_val(10.0);
  ep->add_option("--out", common.out_path, "CSV output path (default: stdout)");
  ep->add_option("--svg", common.svg_path, "SVG output path");

  std::string pipeline_text;
  double nbar_run = 0.0;
  std::vector<double> d_run = {0.0, 0.0};
  auto* run = app.add_subcommand("run", "Evaluate a pipeline and report the output state");
  run->add_option("pipeline", pipeline_text, "pipeline text, e.g. \"att(theta=pi/2, m=2)\"")
      ->required();
  run->add_option("--n", nbar_run, "input mean photon number")->default_val(0.0);
  run->add_option("--d", d_run, "input first moments q,p")->delimiter(',')->expected(1, 2);

  auto* validate = app.add_subcommand("validate", "Parse a pipeline and check every stage's map");
  std::string validate_text;
  validate->add_option("pipeline", validate_text, "pipeline text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUserError;
  }

  try {
    if (coh->parsed())
      return cmd_coherence_sweep(common, nbar_sweep, mbars, param_min, param_max, steps,
                                 normalize);
    if (ep->parsed())
      return cmd_entropy_sweep(common, mode, nbar_ep, mbars, reservoir_nbar, gamma, energy, param,
                               param_min, param_max, steps, t, t_max, r_max);
    if (run->parsed()) return cmd_run(pipeline_text, nbar_run, d_run);
    if (validate->parsed()) return cmd_validate(validate_text);
  } catch (const cvchan::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUserError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const cvchan::NonPhysicalStateError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const cvchan::CpViolationError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitUserError;
}
