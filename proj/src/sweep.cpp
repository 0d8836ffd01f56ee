#include "cvchan/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "cvchan/coherence.hpp"
#include "cvchan/version.hpp"

namespace cvchan {

namespace {

const char* family_name(ChannelFamily family) {
  return family == ChannelFamily::attenuation ? "att" : "amp";
}

const char* convention_name(EnergyConvention convention) {
  return convention == EnergyConvention::full ? "full" : "covariance";
}

std::string join_sig12(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += format_sig12(values[i]);
  }
  return out;
}

GcpMap family_map(ChannelFamily family, double param, double mbar) {
  return family == ChannelFamily::attenuation ? attenuation(param, mbar)
                                              : amplification(param, mbar);
}

void write_meta(std::ostream& out, const std::string& command,
                const std::vector<std::pair<std::string, std::string>>& entries) {
  out << "# " << kToolName << " " << kVersion << " " << command << "\n";
  for (const auto& [key, value] : entries) out << "# " << key << "=" << value << "\n";
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string format_tick(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value + 0.0);
  return buf;
}

}  // namespace

std::string format_sig12(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::vector<double> sweep_grid(double min, double max, int steps) {
  if (steps < 2) throw std::invalid_argument("sweep grid needs at least 2 steps");
  if (!(max > min)) throw std::invalid_argument("sweep grid must be strictly increasing");
  std::vector<double> grid(steps);
  const double span = max - min;
  for (int i = 0; i < steps; ++i) grid[i] = min + span * i / (steps - 1);
  grid.back() = max;
  if (min == 0.0 && max == 2.0 * M_PI && (steps - 1) % 4 == 0) {
    const int quarter = (steps - 1) / 4;
    grid[quarter] = M_PI / 2.0;
    grid[2 * quarter] = M_PI;
    grid[3 * quarter] = 3.0 * (M_PI / 2.0);
  }
  return grid;
}

CoherenceSweepConfig default_coherence_sweep(ChannelFamily family) {
  CoherenceSweepConfig config;
  config.family = family;
  config.param_max = family == ChannelFamily::attenuation ? 2.0 * M_PI : 6.0;
  return config;
}

CoherenceSweepResult run_coherence_sweep(const CoherenceSweepConfig& config) {
  if (config.nbar < 0.0) throw std::invalid_argument("coherence sweep: n must be >= 0");
  if (config.mbars.empty()) throw std::invalid_argument("coherence sweep: need at least one m");
  for (double m : config.mbars)
    if (m < 0.0) throw std::invalid_argument("coherence sweep: m must be >= 0");
  if (config.family == ChannelFamily::amplification && config.param_min < 0.0)
    throw std::invalid_argument("coherence sweep: r must be >= 0");
  const std::vector<double> grid = sweep_grid(config.param_min, config.param_max, config.steps);

  const GaussianState input = displaced_thermal(config.nbar, config.q0, config.p0);
  const double input_coherence = coherence(input).coherence;

  CoherenceSweepResult result;
  result.input_coherence = input_coherence;
  result.rows.reserve(config.mbars.size() * grid.size());
  for (double mbar : config.mbars) {
    for (double param : grid) {
      const double c = coherence(apply(family_map(config.family, param, mbar), input)).coherence;
      const double normalized = input_coherence > 0.0 ? c / input_coherence : 0.0;
      result.rows.push_back({param, mbar, c, normalized});
    }
  }
  return result;
}

EntropySweepConfig default_entropy_sweep(ChannelFamily family) {
  EntropySweepConfig config;
  config.family = family;
  config.param_max = family == ChannelFamily::attenuation ? 2.0 * M_PI : 6.0;
  return config;
}

EntropySweepResult run_entropy_sweep(const EntropySweepConfig& config) {
  if (config.nbar < 0.0 || config.mbar < 0.0)
    throw std::invalid_argument("entropy sweep: n and m must be >= 0");
  if (config.reservoir_nbar <= 0.0)
    throw std::invalid_argument("entropy sweep: reservoir N must be > 0");
  if (config.family == ChannelFamily::amplification &&
      (config.param < 0.0 || config.param_min < 0.0))
    throw std::invalid_argument("entropy sweep: r must be >= 0");
  const ThermalReservoir reservoir(config.reservoir_nbar, config.gamma);

  ChannelProtocol protocol;
  protocol.family = config.family;
  protocol.nbar = config.nbar;
  protocol.mbar = config.mbar;
  protocol.q0 = config.q0;
  protocol.p0 = config.p0;
  protocol.r_max = config.r_max;
  const double param0 =
      config.family == ChannelFamily::attenuation ? M_PI / 2.0 : config.r_max;

  EntropySweepResult result;
  result.t_fixed = std::numeric_limits<double>::quiet_NaN();

  if (config.mode == SweepMode::time) {
    if (config.t_max <= 0.0) throw std::invalid_argument("entropy sweep: t-max must be > 0");
    protocol.param = config.param;
    const GaussianState state_run = channel_output(protocol);
    protocol.param = param0;
    const GaussianState state_ref = channel_output(protocol);
    for (double t : sweep_grid(0.0, config.t_max, config.steps)) {
      const EntropyRecord rec = entropy_production(state_run, reservoir, t, config.convention);
      const EntropyRecord ref = entropy_production(state_ref, reservoir, t, config.convention);
      result.rows.push_back(
          {t, rec.sigma_prod, rec.delta_U, rec.delta_S, rec.sigma_prod - ref.sigma_prod});
    }
    return result;
  }

  const std::vector<double> grid = sweep_grid(config.param_min, config.param_max, config.steps);
  double t_fixed;
  if (config.t.has_value()) {
    t_fixed = *config.t;
    if (t_fixed < 0.0) throw std::invalid_argument("entropy sweep: t must be >= 0");
  } else {
    // complete thermalization: slowest point on the curve sets the time
    t_fixed = 0.0;
    for (double param : grid) {
      protocol.param = param;
      t_fixed = std::max(
          t_fixed, thermalization_time(channel_output(protocol), reservoir, config.t_th_tol));
    }
    result.t_from_thermalization = true;
  }
  result.t_fixed = t_fixed;

  protocol.param = param0;
  const double sigma_ref =
      entropy_production(channel_output(protocol), reservoir, t_fixed, config.convention)
          .sigma_prod;
  for (double param : grid) {
    protocol.param = param;
    const EntropyRecord rec =
        entropy_production(channel_output(protocol), reservoir, t_fixed, config.convention);
    result.rows.push_back(
        {param, rec.sigma_prod, rec.delta_U, rec.delta_S, rec.sigma_prod - sigma_ref});
  }
  return result;
}

void write_coherence_csv(std::ostream& out, const CoherenceSweepConfig& config,
                         const CoherenceSweepResult& result) {
  write_meta(out, "coherence-sweep",
             {{"channel", family_name(config.family)},
              {"n", format_sig12(config.nbar)},
              {"d", format_sig12(config.q0) + "," + format_sig12(config.p0)},
              {"m", join_sig12(config.mbars)},
              {"param-min", format_sig12(config.param_min)},
              {"param-max", format_sig12(config.param_max)},
              {"steps", std::to_string(config.steps)},
              {"input-coherence", format_sig12(result.input_coherence)}});
  out << "param_value,mbar,coherence,normalized_coherence\n";
  for (const auto& row : result.rows)
    out << format_sig12(row.param) << "," << format_sig12(row.mbar) << ","
        << format_sig12(row.coherence) << "," << format_sig12(row.normalized) << "\n";
}

void write_entropy_csv(std::ostream& out, const EntropySweepConfig& config,
                       const EntropySweepResult& result) {
  std::vector<std::pair<std::string, std::string>> meta = {
      {"channel", family_name(config.family)},
      {"mode", config.mode == SweepMode::time ? "time" : "param"},
      {"n", format_sig12(config.nbar)},
      {"m", format_sig12(config.mbar)},
      {"d", format_sig12(config.q0) + "," + format_sig12(config.p0)},
      {"N", format_sig12(config.reservoir_nbar)},
      {"gamma", format_sig12(config.gamma)},
      {"energy", convention_name(config.convention)},
      {"steps", std::to_string(config.steps)},
      {"r-max", format_sig12(config.r_max)}};
  if (config.mode == SweepMode::time) {
    meta.emplace_back("param", format_sig12(config.param));
    meta.emplace_back("t-max", format_sig12(config.t_max));
  } else {
    meta.emplace_back("param-min", format_sig12(config.param_min));
    meta.emplace_back("param-max", format_sig12(config.param_max));
    meta.emplace_back("t", format_sig12(result.t_fixed));
    if (result.t_from_thermalization) {
      meta.emplace_back("t-source", "thermalization-time");
      meta.emplace_back("t-th-tol", format_sig12(config.t_th_tol));
    }
  }
  write_meta(out, "entropy-sweep", meta);
  out << "x_value,sigma_prod,delta_U,delta_S,sigma_coherence,convention\n";
  for (const auto& row : result.rows)
    out << format_sig12(row.x) << "," << format_sig12(row.sigma_prod) << ","
        << format_sig12(row.delta_U) << "," << format_sig12(row.delta_S) << ","
        << format_sig12(row.sigma_coherence) << "," << convention_name(config.convention)
        << "\n";
}

void write_svg(std::ostream& out, const std::string& title, const std::string& x_label,
               const std::string& y_label, const std::vector<SvgSeries>& series) {
  static const char* kPalette[] = {"#000000", "#d62728", "#1f77b4",
                                   "#2ca02c", "#9467bd", "#8c564b"};
  const double width = 860, height = 520;
  const double left = 80, right = 30, top = 40, bottom = 60;

  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  bool first = true;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (first) {
        x_min = x_max = x;
        y_min = y_max = y;
        first = false;
      }
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  if (y_max <= y_min) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  const double pad = 0.04 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;

  const auto px = [&](double x) {
    return left + (x - x_min) / (x_max - x_min) * (width - left - right);
  };
  const auto py = [&](double y) {
    return height - bottom - (y - y_min) / (y_max - y_min) * (height - top - bottom);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << xml_escape(title) << "</text>\n";

  // axes with 6 ticks each
  out << "<g stroke=\"#333333\" stroke-width=\"1\" fill=\"none\">\n";
  out << "<path d=\"M" << left << " " << top << " V" << height - bottom << " H" << width - right
      << "\"/>\n";
  out << "</g>\n";
  out << "<g font-size=\"12\" fill=\"#333333\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = x_min + (x_max - x_min) * i / 5.0;
    const double yv = y_min + (y_max - y_min) * i / 5.0;
    out << "<line x1=\"" << px(xv) << "\" y1=\"" << height - bottom << "\" x2=\"" << px(xv)
        << "\" y2=\"" << height - bottom + 5 << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << px(xv) << "\" y=\"" << height - bottom + 20
        << "\" text-anchor=\"middle\">" << format_tick(xv) << "</text>\n";
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << left << "\" y2=\""
        << py(yv) << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << left - 9 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
        << format_tick(yv) << "</text>\n";
  }
  out << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 15
      << "\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(x_label) << "</text>\n";
  out << "<text x=\"20\" y=\"" << (top + height - bottom) / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
      << (top + height - bottom) / 2 << ")\">" << xml_escape(y_label) << "</text>\n";
  out << "</g>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kPalette[k % (sizeof kPalette / sizeof kPalette[0])];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[k].points) out << px(x) << "," << py(y) << " ";
    out << "\"/>\n";
    out << "<text x=\"" << width - right - 10 << "\" y=\"" << top + 18 + 16 * k
        << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">"
        << xml_escape(series[k].label) << "</text>\n";
  }
  out << "</svg>\n";
}

std::vector<SvgSeries> coherence_svg_series(const CoherenceSweepConfig& config,
                                            const CoherenceSweepResult& result, bool normalized) {
  std::vector<SvgSeries> series;
  for (double mbar : config.mbars) {
    SvgSeries s;
    s.label = "m=" + format_sig12(mbar);
    for (const auto& row : result.rows)
      if (row.mbar == mbar) s.points.emplace_back(row.param, normalized ? row.normalized : row.coherence);
    series.push_back(std::move(s));
  }
  return series;
}

std::vector<SvgSeries> entropy_svg_series(const EntropySweepConfig& config,
                                          const EntropySweepResult& result) {
  SvgSeries s;
  s.label = config.mode == SweepMode::time
                ? std::string(family_name(config.family)) + " param=" + format_sig12(config.param)
                : std::string(family_name(config.family)) + " t=" + format_sig12(result.t_fixed);
  for (const auto& row : result.rows) s.points.emplace_back(row.x, row.sigma_prod);
  return {std::move(s)};
}

std::string run_report_json(const GaussianState& final_state) {
  const CoherenceReport report = coherence(final_state);
  const std::vector<double> nus = symplectic_eigenvalues(final_state);

  const auto array = [](const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out += ", ";
      out += format_sig12(values[i]);
    }
    return out + "]";
  };
  std::vector<double> d(final_state.d.data(), final_state.d.data() + final_state.d.size());
  std::vector<double> sigma;  // row-major
  for (Eigen::Index i = 0; i < final_state.sigma.rows(); ++i)
    for (Eigen::Index j = 0; j < final_state.sigma.cols(); ++j)
      sigma.push_back(final_state.sigma(i, j));

  std::string out = "{\n";
  out += "  \"n_modes\": " + std::to_string(final_state.n_modes()) + ",\n";
  out += "  \"d\": " + array(d) + ",\n";
  out += "  \"sigma\": " + array(sigma) + ",\n";
  out += "  \"symplectic_eigenvalues\": " + array(nus) + ",\n";
  out += "  \"entropy\": " + format_sig12(report.entropy_state) + ",\n";
  out += "  \"kbar\": " + array(report.kbars) + ",\n";
  out += "  \"coherence\": " + format_sig12(report.coherence) + "\n";
  out += "}\n";
  return out;
}

}  // namespace cvchan
