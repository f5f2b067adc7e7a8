#include "heatpen/config.hpp"

#include "heatpen/functions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

namespace heatpen {

const char* to_string(Experiment e) {
  switch (e) {
    case Experiment::BoundaryLayer: return "boundary-layer";
    case Experiment::Square: return "square";
    case Experiment::Disk: return "disk";
    case Experiment::OneD: return "oned";
    case Experiment::SweepEpsilon: return "sweep-epsilon";
  }
  return "?";
}

ConfigError::ConfigError(int line_, const std::string& message)
    : std::runtime_error(line_ > 0 ? "config line " + std::to_string(line_) + ": " + message
                                   : "config: " + message),
      line(line_) {}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& v, const std::string& key, int line) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(line, "invalid number for '" + key + "': '" + v + "'");
  }
}

int parse_int(const std::string& v, const std::string& key, int line) {
  int x = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError(line, "invalid integer for '" + key + "': '" + v + "'");
  return x;
}

int parse_positive_int(const std::string& v, const std::string& key, int line) {
  const int x = parse_int(v, key, line);
  if (x <= 0) throw ConfigError(line, "'" + key + "' must be positive, got '" + v + "'");
  return x;
}

double parse_positive(const std::string& v, const std::string& key, int line) {
  const double x = parse_double(v, key, line);
  if (!(x > 0.0))
    throw ConfigError(line, "'" + key + "' must be positive, got '" + v + "'");
  return x;
}

std::vector<double> parse_double_list(const std::string& v, const std::string& key,
                                      int line) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(line, "empty element in '" + key + "'");
    out.push_back(parse_positive(item, key, line));
  }
  if (out.empty()) throw ConfigError(line, "'" + key + "' needs at least one value");
  return out;
}

}  // namespace

void apply_key_value(RunConfig& c, const std::string& key, const std::string& value,
                     int line) {
  if (key == "out_dir") { c.out_dir = value; return; }
  if (key == "nu") { c.nu = parse_positive(value, key, line); return; }
  if (key == "epsilon") { c.epsilon = parse_positive(value, key, line); return; }
  if (key == "t_end") { c.t_end = parse_positive(value, key, line); return; }
  if (key == "epsilons") { c.epsilons = parse_double_list(value, key, line); return; }
  if (key == "mode") {
    if (value != "all" && value != "direct" && value != "penalty" && value != "corrector")
      throw ConfigError(line, "mode must be all|direct|penalty|corrector, got '" + value + "'");
    c.mode = value;
    return;
  }
  if (key == "procedure") {
    const int p = parse_int(value, key, line);
    if (p < 0 || p > 2) throw ConfigError(line, "procedure must be 0, 1 or 2");
    c.procedure = p;
    return;
  }
  if (key == "u0" || key == "g" || key == "f") {
    try {
      if (key == "u0") space_function(value);
      else if (key == "g") time_signal(value);
      else forcing(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(line, e.what());
    }
    (key == "u0" ? c.u0 : key == "g" ? c.g : c.f) = value;
    return;
  }
  if (key == "nx") { c.nx = parse_positive_int(value, key, line); return; }
  if (key == "ny") { c.ny = parse_positive_int(value, key, line); return; }
  if (key == "steps") { c.steps = parse_positive_int(value, key, line); return; }
  if (key == "fine_nx") { c.fine_nx = parse_positive_int(value, key, line); return; }
  if (key == "fine_ny") { c.fine_ny = parse_positive_int(value, key, line); return; }
  if (key == "fine_steps") { c.fine_steps = parse_positive_int(value, key, line); return; }
  if (key == "nr") { c.nr = parse_positive_int(value, key, line); return; }
  if (key == "ntheta") { c.ntheta = parse_positive_int(value, key, line); return; }
  if (key == "fine_nr") { c.fine_nr = parse_positive_int(value, key, line); return; }
  if (key == "fine_ntheta") { c.fine_ntheta = parse_positive_int(value, key, line); return; }
  if (key == "point_x") { c.point_x = parse_double(value, key, line); return; }
  if (key == "point_y") { c.point_y = parse_double(value, key, line); return; }
  if (key == "section_y") { c.section_y = parse_double(value, key, line); return; }
  if (key == "section_theta") { c.section_theta = parse_double(value, key, line); return; }
  if (key == "base") {
    if (value != "square" && value != "disk" && value != "oned")
      throw ConfigError(line, "base must be square|disk|oned, got '" + value + "'");
    c.base = value;
    return;
  }
  throw ConfigError(line, "unknown key '" + key + "'");
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError(0, "cannot open '" + path.string() + "'");
  std::string raw;
  int line = 0;
  while (std::getline(f, raw)) {
    ++line;
    const auto hash = raw.find('#');
    std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ConfigError(line, "expected 'key = value', got '" + text + "'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "missing key");
    if (value.empty()) throw ConfigError(line, "missing value for '" + key + "'");
    apply_key_value(config, key, value, line);
  }
}

void RunConfig::validate() const {
  if (!(nu > 0.0)) throw ConfigError(0, "nu must be positive");
  if (!(epsilon > 0.0)) throw ConfigError(0, "epsilon must be positive");
  for (double e : epsilons)
    if (!(e > 0.0)) throw ConfigError(0, "epsilons must be positive");
  if (out_dir.empty()) throw ConfigError(0, "out_dir must not be empty");
}

RunConfig default_config(Experiment experiment) {
  RunConfig c;
  c.experiment = experiment;
  c.section_theta = std::numbers::pi / 4.0;
  switch (experiment) {
    case Experiment::BoundaryLayer:
      c.u0 = "paper_square_u0";
      c.g = "sin_t";
      c.epsilons = {0.1, 0.01};
      c.steps = 1000;
      break;
    case Experiment::Square:
    case Experiment::SweepEpsilon:
      c.u0 = "paper_square_u0";
      break;
    case Experiment::Disk:
      c.u0 = "xy";
      // The theta term of the polar stencil at the innermost ring caps dt
      // at about 2.4e-4 for dr = 1/10, ntheta = 63 (scaling by 1/16 per
      // refinement level), so these meshes need many more steps.
      c.steps = 5000;
      c.fine_steps = 80000;
      break;
    case Experiment::OneD:
      c.u0 = "paper_1d_u0";
      break;
  }
  return c;
}

std::string resolve_out_dir(const std::string& configured,
                            const std::optional<std::string>& env_value) {
  if (env_value && !env_value->empty()) return *env_value;
  return configured;
}

}  // namespace heatpen
