#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cvchan/errors.hpp"
#include "cvchan/gaussian.hpp"

namespace cvchan {

// Channel-pipeline DSL.
//
//   pipeline := stage ("|" stage)*
//   stage    := ident "(" [arg ("," arg)*] ")"
//   arg      := ident "=" expr
//   expr     := term (("*" | "/") term)*
//   term     := ["-"] (number | "pi")
//
// Stages (case-sensitive): att(theta, m), amp(r, m), qla(theta), qlamp(r),
// phase(theta, r), therm(t, N, gamma), displace(q, p). "m" defaults to 0
// (quantum-limited); all other arguments are required. Whitespace is
// insignificant. Unknown stages or arguments, duplicate arguments, and
// arguments outside the channel constructors' domains are errors; every
// error carries a 1-based line/column position.

struct AttStage {
  double theta, mbar;
  bool operator==(const AttStage&) const = default;
};
struct AmpStage {
  double r, mbar;
  bool operator==(const AmpStage&) const = default;
};
struct QlaStage {
  double theta;
  bool operator==(const QlaStage&) const = default;
};
struct QlampStage {
  double r;
  bool operator==(const QlampStage&) const = default;
};
struct PhaseStage {
  double theta, r;
  bool operator==(const PhaseStage&) const = default;
};
struct ThermStage {
  double t, nbar, gamma;
  bool operator==(const ThermStage&) const = default;
};
struct DisplaceStage {
  double dq, dp;
  bool operator==(const DisplaceStage&) const = default;
};

using Stage =
    std::variant<AttStage, AmpStage, QlaStage, QlampStage, PhaseStage, ThermStage, DisplaceStage>;

struct PipelineSpec {
  std::vector<Stage> stages;
  bool operator==(const PipelineSpec&) const = default;
};

/// Throws ParseError (with position) on any malformed input.
PipelineSpec parse_pipeline(std::string_view text);

/// Canonical text form; parse_pipeline(print_pipeline(spec)) == spec.
std::string print_pipeline(const PipelineSpec& spec);

/// Apply the stages left to right to a single-mode input state.
GaussianState evaluate(const PipelineSpec& spec, const GaussianState& input);

}  // namespace cvchan
