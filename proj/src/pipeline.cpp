#include "cvchan/pipeline.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>

#include "cvchan/channels.hpp"

namespace cvchan {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }

  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
      advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, column, msg); }
};

struct ArgValue {
  double value;
  int line, column;  // where the argument name started, for domain diagnostics
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string parse_ident(Cursor& cur) {
  if (cur.done() || !ident_start(cur.peek())) cur.fail("expected identifier");
  std::string name;
  while (!cur.done() && ident_char(cur.peek())) {
    name.push_back(cur.peek());
    cur.advance();
  }
  return name;
}

double parse_number(Cursor& cur) {
  const std::size_t start = cur.pos;
  auto digits = [&] {
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance();
  };
  digits();
  if (!cur.done() && cur.peek() == '.') {
    cur.advance();
    digits();
  }
  if (cur.pos == start || (cur.pos == start + 1 && cur.text[start] == '.'))
    cur.fail("expected number");
  if (!cur.done() && (cur.peek() == 'e' || cur.peek() == 'E')) {
    cur.advance();
    if (!cur.done() && (cur.peek() == '+' || cur.peek() == '-')) cur.advance();
    const std::size_t exp_start = cur.pos;
    digits();
    if (cur.pos == exp_start) cur.fail("expected exponent digits");
  }
  double value = 0.0;
  const char* first = cur.text.data() + start;
  const char* last = cur.text.data() + cur.pos;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) cur.fail("invalid number");
  return value;
}

double parse_term(Cursor& cur) {
  cur.skip_ws();
  double sign = 1.0;
  if (!cur.done() && cur.peek() == '-') {
    sign = -1.0;
    cur.advance();
    cur.skip_ws();
  }
  if (cur.done()) cur.fail("expected number or 'pi'");
  if (ident_start(cur.peek())) {
    const int line = cur.line, column = cur.column;
    const std::string name = parse_ident(cur);
    if (name != "pi") throw ParseError(line, column, "unknown constant '" + name + "'");
    return sign * M_PI;
  }
  return sign * parse_number(cur);
}

double parse_expr(Cursor& cur) {
  double value = parse_term(cur);
  for (;;) {
    cur.skip_ws();
    if (cur.done() || (cur.peek() != '*' && cur.peek() != '/')) return value;
    const char op = cur.peek();
    cur.advance();
    const double rhs = parse_term(cur);
    value = op == '*' ? value * rhs : value / rhs;
  }
}

struct StageSignature {
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

const std::map<std::string, StageSignature>& stage_signatures() {
  static const std::map<std::string, StageSignature> table = {
      {"att", {{"theta"}, {"m"}}},         {"amp", {{"r"}, {"m"}}},
      {"qla", {{"theta"}, {}}},            {"qlamp", {{"r"}, {}}},
      {"phase", {{"theta", "r"}, {}}},     {"therm", {{"t", "N", "gamma"}, {}}},
      {"displace", {{"q", "p"}, {}}},
  };
  return table;
}

Stage parse_stage(Cursor& cur) {
  cur.skip_ws();
  const int stage_line = cur.line, stage_column = cur.column;
  if (cur.done()) cur.fail("expected stage");
  if (!ident_start(cur.peek())) cur.fail("expected stage name");
  const std::string name = parse_ident(cur);
  const auto sig_it = stage_signatures().find(name);
  if (sig_it == stage_signatures().end())
    throw ParseError(stage_line, stage_column, "unknown stage '" + name + "'");
  const StageSignature& sig = sig_it->second;

  cur.skip_ws();
  if (cur.done() || cur.peek() != '(') cur.fail("expected '(' after stage name");
  cur.advance();

  std::map<std::string, ArgValue> args;
  cur.skip_ws();
  if (!cur.done() && cur.peek() != ')') {
    for (;;) {
      cur.skip_ws();
      const int arg_line = cur.line, arg_column = cur.column;
      if (cur.done() || !ident_start(cur.peek())) cur.fail("expected argument name");
      const std::string arg = parse_ident(cur);
      const bool known =
          std::find(sig.required.begin(), sig.required.end(), arg) != sig.required.end() ||
          std::find(sig.optional.begin(), sig.optional.end(), arg) != sig.optional.end();
      if (!known)
        throw ParseError(arg_line, arg_column,
                         "unknown argument '" + arg + "' for stage '" + name + "'");
      if (args.count(arg))
        throw ParseError(arg_line, arg_column, "duplicate argument '" + arg + "'");
      cur.skip_ws();
      if (cur.done() || cur.peek() != '=') cur.fail("expected '=' after argument name");
      cur.advance();
      const double value = parse_expr(cur);
      if (!std::isfinite(value))
        throw ParseError(arg_line, arg_column, "argument '" + arg + "' is not finite");
      args.emplace(arg, ArgValue{value, arg_line, arg_column});
      cur.skip_ws();
      if (!cur.done() && cur.peek() == ',') {
        cur.advance();
        continue;
      }
      break;
    }
  }
  if (cur.done() || cur.peek() != ')') cur.fail("expected ')'");
  cur.advance();

  for (const auto& req : sig.required)
    if (!args.count(req))
      throw ParseError(stage_line, stage_column,
                       "stage '" + name + "' is missing required argument '" + req + "'");

  const auto get = [&](const std::string& arg, double fallback = 0.0) {
    const auto it = args.find(arg);
    return it == args.end() ? fallback : it->second.value;
  };
  const auto domain = [&](const std::string& arg, bool ok, const char* what) {
    if (ok) return;
    const auto& a = args.at(arg);
    throw ParseError(a.line, a.column, "argument '" + arg + "' out of domain: " + what);
  };

  if (name == "att") {
    if (args.count("m")) domain("m", get("m") >= 0.0, "m must be >= 0");
    return AttStage{get("theta"), get("m")};
  }
  if (name == "amp") {
    domain("r", get("r") >= 0.0, "r must be >= 0");
    if (args.count("m")) domain("m", get("m") >= 0.0, "m must be >= 0");
    return AmpStage{get("r"), get("m")};
  }
  if (name == "qla") return QlaStage{get("theta")};
  if (name == "qlamp") {
    domain("r", get("r") >= 0.0, "r must be >= 0");
    return QlampStage{get("r")};
  }
  if (name == "phase") {
    domain("r", get("r") >= 0.0, "r must be >= 0");
    return PhaseStage{get("theta"), get("r")};
  }
  if (name == "therm") {
    domain("t", get("t") >= 0.0, "t must be >= 0");
    domain("N", get("N") >= 0.0, "N must be >= 0");
    domain("gamma", get("gamma") > 0.0, "gamma must be > 0");
    return ThermStage{get("t"), get("N"), get("gamma")};
  }
  return DisplaceStage{get("q"), get("p")};
}

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

PipelineSpec parse_pipeline(std::string_view text) {
  Cursor cur{text};
  PipelineSpec spec;
  spec.stages.push_back(parse_stage(cur));
  for (;;) {
    cur.skip_ws();
    if (cur.done()) break;
    if (cur.peek() != '|') cur.fail("expected '|' between stages");
    cur.advance();
    spec.stages.push_back(parse_stage(cur));
  }
  return spec;
}

std::string print_pipeline(const PipelineSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    if (i > 0) out += " | ";
    std::visit(
        [&](const auto& stage) {
          using T = std::decay_t<decltype(stage)>;
          if constexpr (std::is_same_v<T, AttStage>)
            out += "att(theta=" + format_full(stage.theta) + ", m=" + format_full(stage.mbar) + ")";
          else if constexpr (std::is_same_v<T, AmpStage>)
            out += "amp(r=" + format_full(stage.r) + ", m=" + format_full(stage.mbar) + ")";
          else if constexpr (std::is_same_v<T, QlaStage>)
            out += "qla(theta=" + format_full(stage.theta) + ")";
          else if constexpr (std::is_same_v<T, QlampStage>)
            out += "qlamp(r=" + format_full(stage.r) + ")";
          else if constexpr (std::is_same_v<T, PhaseStage>)
            out += "phase(theta=" + format_full(stage.theta) + ", r=" + format_full(stage.r) + ")";
          else if constexpr (std::is_same_v<T, ThermStage>)
            out += "therm(t=" + format_full(stage.t) + ", N=" + format_full(stage.nbar) +
                   ", gamma=" + format_full(stage.gamma) + ")";
          else
            out += "displace(q=" + format_full(stage.dq) + ", p=" + format_full(stage.dp) + ")";
        },
        spec.stages[i]);
  }
  return out;
}

GaussianState evaluate(const PipelineSpec& spec, const GaussianState& input) {
  if (input.n_modes() != 1)
    throw std::invalid_argument("evaluate: pipeline stages act on a single mode");
  GaussianState state = input;
  for (const Stage& stage : spec.stages) {
    state = std::visit(
        [&](const auto& s) -> GaussianState {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, AttStage>)
            return apply(attenuation(s.theta, s.mbar), state);
          else if constexpr (std::is_same_v<T, AmpStage>)
            return apply(amplification(s.r, s.mbar), state);
          else if constexpr (std::is_same_v<T, QlaStage>)
            return apply(quantum_limited_attenuator(s.theta), state);
          else if constexpr (std::is_same_v<T, QlampStage>)
            return apply(quantum_limited_amplifier(s.r), state);
          else if constexpr (std::is_same_v<T, PhaseStage>)
            return apply(phase_insensitive(s.theta, s.r), state);
          else if constexpr (std::is_same_v<T, ThermStage>)
            return apply(thermalization_map(s.t, s.gamma, s.nbar), state);
          else {
            GaussianState shifted = state;
            shifted.d(0) += s.dq;
            shifted.d(1) += s.dp;
            return shifted;
          }
        },
        stage);
  }
  return state;
}

}  // namespace cvchan
