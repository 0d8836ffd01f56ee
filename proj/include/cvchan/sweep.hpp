#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvchan/pipeline.hpp"
#include "cvchan/thermo.hpp"

namespace cvchan {

/// Fixed 12-significant-digit, locale-independent float formatting used for
/// every number the tool writes (CSV, JSON report, metadata).
std::string format_sig12(double value);

/// Inclusive parameter grid. For an attenuation sweep over [0, 2*pi] with
/// steps = 1 (mod 4), the quarter points land exactly on pi/2, pi, 3*pi/2 so
/// the zero-coherence angles are sampled exactly.
std::vector<double> sweep_grid(double min, double max, int steps);

struct CoherenceSweepConfig {
  ChannelFamily family = ChannelFamily::attenuation;
  double nbar = 4.0;
  double q0 = 1.0;
  double p0 = 1.0;
  std::vector<double> mbars = {0.0, 2.0, 4.0};
  double param_min = 0.0;
  double param_max = 0.0;  // defaulted per family by default_coherence_sweep
  int steps = 201;
};

CoherenceSweepConfig default_coherence_sweep(ChannelFamily family);

struct CoherenceRow {
  double param;
  double mbar;
  double coherence;
  double normalized;  // coherence / C(input); 0 when the input is incoherent
};

struct CoherenceSweepResult {
  std::vector<CoherenceRow> rows;  // grouped by mbar series, grid-ordered
  double input_coherence;
};

CoherenceSweepResult run_coherence_sweep(const CoherenceSweepConfig& config);

enum class SweepMode { time, param };

struct EntropySweepConfig {
  ChannelFamily family = ChannelFamily::attenuation;
  SweepMode mode = SweepMode::time;
  double nbar = 1.0;
  double mbar = 2.0;
  double q0 = 1.0;
  double p0 = 1.0;
  double reservoir_nbar = 5.0;
  double gamma = 0.1;
  EnergyConvention convention = EnergyConvention::full;
  int steps = 201;
  // time mode: channel parameter held at `param`, t swept over [0, t_max]
  double param = 0.0;
  double t_max = 60.0;
  // param mode: theta or r swept; t fixed at `t`, or at the complete
  // thermalization time T_th when unset
  double param_min = 0.0;
  double param_max = 0.0;  // defaulted per family
  std::optional<double> t;
  double r_max = 10.0;     // amplification reference point for sigma_coherence
  double t_th_tol = 1e-6;  // tolerance defining complete thermalization
};

EntropySweepConfig default_entropy_sweep(ChannelFamily family);

struct EntropyRow {
  double x;  // t in time mode, theta/r in param mode
  double sigma_prod;
  double delta_U;
  double delta_S;
  double sigma_coherence;  // sigma_prod minus the zero-coherence reference run
};

struct EntropySweepResult {
  std::vector<EntropyRow> rows;
  double t_fixed;       // resolved time in param mode (NaN in time mode)
  bool t_from_thermalization = false;
};

EntropySweepResult run_entropy_sweep(const EntropySweepConfig& config);

// Output writers. Metadata lines go first, '#'-prefixed, and carry every
// parameter needed to reproduce the run; identical configs produce
// byte-identical files.
void write_coherence_csv(std::ostream& out, const CoherenceSweepConfig& config,
                         const CoherenceSweepResult& result);
void write_entropy_csv(std::ostream& out, const EntropySweepConfig& config,
                       const EntropySweepResult& result);

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Minimal self-contained line plot: one polyline per series, labeled axes.
void write_svg(std::ostream& out, const std::string& title, const std::string& x_label,
               const std::string& y_label, const std::vector<SvgSeries>& series);

std::vector<SvgSeries> coherence_svg_series(const CoherenceSweepConfig& config,
                                            const CoherenceSweepResult& result, bool normalized);
std::vector<SvgSeries> entropy_svg_series(const EntropySweepConfig& config,
                                          const EntropySweepResult& result);

/// JSON report for one evaluated pipeline: final first moments, covariance
/// (row-major), symplectic spectrum, entropy, reference photon numbers and
/// coherence, all at 12 significant digits.
std::string run_report_json(const GaussianState& final_state);

}  // namespace cvchan
