#include "cavitybec/params.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace cavitybec {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ValidationError("unparsable-value",
                          "cannot read '" + std::string(text) + "' for key " + std::string(key));
  }
  return value;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

ModelParams validate(const ModelParams& raw) {
  const auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(raw.delta_c) || !finite(raw.u0) || !finite(raw.eta) || !finite(raw.gn) ||
      !finite(raw.n_c) || !finite(raw.length) || !finite(raw.temperature) ||
      !finite(raw.epsilon)) {
    throw ValidationError("finite-values", "all parameters must be finite numbers");
  }
  if (raw.gn < 0.0) throw ValidationError("gn", "interaction energy gn must be nonnegative");
  if (raw.n_c < 1.0) throw ValidationError("n_c", "condensate atom number must be at least 1");
  if (raw.length < 1.0) throw ValidationError("length", "cavity length must be at least 1");
  if (!(raw.epsilon > 0.0)) throw ValidationError("epsilon", "epsilon must be positive");
  if (raw.temperature < 0.0) {
    throw ValidationError("temperature", "temperature must be nonnegative");
  }
  if (raw.zone_points < 16) {
    throw ValidationError("zone_points", "zone grid needs at least 16 points");
  }
  if (raw.eta < 0.0) throw ValidationError("eta", "drive amplitude must be nonnegative");
  if (!(effective_detuning(raw) < 0.0)) {
    throw ValidationError("nonnegative-detuning", "no normal-phase threshold exists");
  }
  return raw;
}

double effective_detuning(const ModelParams& p) { return p.delta_c - 0.5 * p.u0 * p.n_c; }

double critical_coupling(const ModelParams& p) { return std::sqrt(-effective_detuning(p)); }

double density_wave_frequency(const ModelParams& p) { return std::sqrt(1.0 + 2.0 * p.gn); }

// The (a, c_0) soft mode vanishes at 4 lambda^2 = -delta_C (1 + 2 gn), i.e. at eta^2 = -delta_C.
double drive_coupling(const ModelParams& p) { return 0.5 * p.eta * std::sqrt(1.0 + 2.0 * p.gn); }

void set_param(ModelParams& p, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "delta_c") p.delta_c = parse_number<double>(key, value);
  else if (key == "u0") p.u0 = parse_number<double>(key, value);
  else if (key == "eta") p.eta = parse_number<double>(key, value);
  else if (key == "gn") p.gn = parse_number<double>(key, value);
  else if (key == "n_c") p.n_c = parse_number<double>(key, value);
  else if (key == "length") p.length = parse_number<double>(key, value);
  else if (key == "temperature") p.temperature = parse_number<double>(key, value);
  else if (key == "epsilon") p.epsilon = parse_number<double>(key, value);
  else if (key == "zone_points") p.zone_points = parse_number<int>(key, value);
  else throw ValidationError("unknown-key", "'" + std::string(key) + "' is not a parameter");
}

ModelParams read_params(std::istream& in, ModelParams base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("syntax", "line " + std::to_string(lineno) + " is not key=value");
    }
    set_param(base, trim(view.substr(0, eq)), view.substr(eq + 1));
  }
  return base;
}

std::vector<std::pair<std::string, std::string>> param_entries(const ModelParams& p) {
  return {
      {"delta_c", format_double(p.delta_c)},
      {"u0", format_double(p.u0)},
      {"eta", format_double(p.eta)},
      {"gn", format_double(p.gn)},
      {"n_c", format_double(p.n_c)},
      {"length", format_double(p.length)},
      {"temperature", format_double(p.temperature)},
      {"epsilon", format_double(p.epsilon)},
      {"zone_points", std::to_string(p.zone_points)},
  };
}

void write_params(std::ostream& out, const ModelParams& p) {
  for (const auto& [key, value] : param_entries(p)) out << key << '=' << value << '\n';
}

}  // namespace cavitybec
