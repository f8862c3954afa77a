#include "vecsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "vecsim/errors.hpp"

namespace vecsim {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view why) {
  throw ValidationError("config key '" + std::string(key) + "': " + std::string(why) + " (got '" +
                        std::string(value) + "')");
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Accepts a plain number or [-][c*]pi[/d].
double parse_angle(std::string_view key, std::string_view raw) {
  const std::string_view s = trim(raw);
  if (auto v = to_double(s)) return *v;
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) bad_value(key, raw, "expected an angle in radians");
  std::string_view head = trim(s.substr(0, pi_pos));
  std::string_view tail = trim(s.substr(pi_pos + 2));
  double factor = 1.0;
  if (!head.empty()) {
    if (head == "-") {
      factor = -1.0;
    } else {
      if (head.back() != '*') bad_value(key, raw, "expected c*pi/d form");
      auto c = to_double(head.substr(0, head.size() - 1));
      if (!c) bad_value(key, raw, "bad multiplier");
      factor = *c;
    }
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') bad_value(key, raw, "expected c*pi/d form");
    auto d = to_double(tail.substr(1));
    if (!d || *d == 0.0) bad_value(key, raw, "bad divisor");
    divisor = *d;
  }
  return factor * kPi / divisor;
}

double parse_real(std::string_view key, std::string_view raw) {
  auto v = to_double(raw);
  if (!v || !std::isfinite(*v)) bad_value(key, raw, "expected a finite number");
  return *v;
}

int parse_count(std::string_view key, std::string_view raw) {
  const std::string_view s = trim(raw);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0 ||
      v > std::numeric_limits<int>::max()) {
    bad_value(key, raw, "expected a non-negative integer");
  }
  return static_cast<int>(v);
}

std::uint64_t parse_u64(std::string_view key, std::string_view raw) {
  const std::string_view s = trim(raw);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) bad_value(key, raw, "expected a 64-bit unsigned integer");
  return v;
}

ErosionStop parse_stop(std::string_view key, std::string_view raw) {
  std::istringstream is{std::string(trim(raw))};
  std::string kind, value, extra;
  is >> kind >> value;
  if (kind.empty() || value.empty() || (is >> extra)) {
    bad_value(key, raw, "expected '<fixed_k|residual_fraction|max_components> <value>'");
  }
  if (kind == "fixed_k") return FixedSteps{parse_count(key, value)};
  if (kind == "residual_fraction") return ResidualFraction{parse_real(key, value)};
  if (kind == "max_components") return MaxComponents{parse_count(key, value)};
  bad_value(key, raw, "unknown erosion stop criterion");
}

}  // namespace

std::string_view to_string(Normalization n) {
  return n == Normalization::paper_raw ? "paper_raw" : "unit_scaled";
}

std::string to_string(const ErosionStop& stop) {
  if (auto* f = std::get_if<FixedSteps>(&stop)) return "fixed_k " + std::to_string(f->k);
  if (auto* r = std::get_if<ResidualFraction>(&stop)) return "residual_fraction " + fmt_double(r->fraction);
  return "max_components " + std::to_string(std::get<MaxComponents>(stop).count);
}

void SimulationConfig::validate() const {
  auto fail = [](std::string_view key, std::string_view why) {
    throw ValidationError("config key '" + std::string(key) + "': " + std::string(why));
  };
  if (!(beta >= 0.0 && beta <= 1.0)) fail("beta", "must lie in [0, 1]");
  if (step_n < 1) fail("step_n", "must be >= 1");
  if (step_m < 1) fail("step_m", "must be >= 1");
  if (step_n == step_m) fail("step_m", "must differ from step_n");
  if (!(accept_a >= 0.0) || !std::isfinite(accept_a)) fail("accept_a", "must be a non-negative finite value");
  if (!(b_param > 0.0) || !std::isfinite(b_param)) fail("b_param", "must be positive and finite");
  if (template_w < 1) fail("template_w", "must be >= 1");
  if (template_h < 1) fail("template_h", "must be >= 1");
  if (seed_rows_r < template_h) fail("seed_rows_r", "must be >= template_h");
  if (seed_cols_t < template_w) fail("seed_cols_t", "must be >= template_w");
  if (interp_radius < 1) fail("interp_radius", "must be >= 1");
  if (component_connectivity != 4 && component_connectivity != 8) {
    fail("component_connectivity", "must be 4 or 8");
  }
  if (auto* r = std::get_if<ResidualFraction>(&erosion_stop)) {
    if (!(r->fraction > 0.0 && r->fraction < 1.0)) fail("erosion_stop", "residual_fraction must lie in (0, 1)");
  }
  if (auto* m = std::get_if<MaxComponents>(&erosion_stop)) {
    if (m->count < 1) fail("erosion_stop", "max_components must be >= 1");
  }
}

SimulationConfig parse_config_text(std::string_view text, std::optional<DirectionalInterval> default_di) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw FormatError("expected 'key = value'", line_no, true);
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw FormatError("empty key", line_no, true);
    if (!kv.emplace(key, value).second) throw FormatError("duplicate key '" + key + "'", line_no, true);
  }

  static const char* const kKnown[] = {
      "di_min", "di_max", "step_n", "step_m", "erosion_stop", "structuring_element",
      "component_connectivity", "interp_radius", "beta", "accept_a", "b_param",
      "seed_rows_r", "seed_cols_t", "template_w", "template_h", "rng_seed", "normalization"};
  for (const auto& [key, value] : kv) {
    if (std::ranges::find(kKnown, key) == std::end(kKnown)) {
      throw ValidationError("config key '" + key + "': unknown key");
    }
  }
  auto get = [&](std::string_view key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  SimulationConfig cfg;
  const std::string* lo = get("di_min");
  const std::string* hi = get("di_max");
  if (lo && hi) {
    cfg.di = DirectionalInterval(parse_angle("di_min", *lo), parse_angle("di_max", *hi));
  } else if (!lo && !hi && default_di) {
    cfg.di = *default_di;
  } else {
    throw ValidationError(std::string("config key '") + (lo ? "di_max" : "di_min") +
                          "': directional interval requires both di_min and di_max");
  }

  if (auto* v = get("step_n")) cfg.step_n = parse_count("step_n", *v);
  if (auto* v = get("step_m")) cfg.step_m = parse_count("step_m", *v);
  if (auto* v = get("erosion_stop")) cfg.erosion_stop = parse_stop("erosion_stop", *v);
  if (auto* v = get("structuring_element")) {
    if (*v == "cross") cfg.structuring_element = ElementShape::cross;
    else if (*v == "square") cfg.structuring_element = ElementShape::square;
    else bad_value("structuring_element", *v, "expected 'cross' or 'square'");
  }
  if (auto* v = get("component_connectivity")) cfg.component_connectivity = parse_count("component_connectivity", *v);
  if (auto* v = get("interp_radius")) cfg.interp_radius = parse_count("interp_radius", *v);
  if (auto* v = get("beta")) cfg.beta = parse_real("beta", *v);
  if (auto* v = get("accept_a")) cfg.accept_a = parse_real("accept_a", *v);
  cfg.b_param = kPi / cfg.di.diameter();
  if (auto* v = get("b_param")) cfg.b_param = parse_real("b_param", *v);
  if (auto* v = get("template_w")) cfg.template_w = parse_count("template_w", *v);
  if (auto* v = get("template_h")) cfg.template_h = parse_count("template_h", *v);
  cfg.seed_rows_r = cfg.template_h;
  cfg.seed_cols_t = cfg.template_w;
  if (auto* v = get("seed_rows_r")) cfg.seed_rows_r = parse_count("seed_rows_r", *v);
  if (auto* v = get("seed_cols_t")) cfg.seed_cols_t = parse_count("seed_cols_t", *v);
  if (auto* v = get("rng_seed")) cfg.rng_seed = parse_u64("rng_seed", *v);
  if (auto* v = get("normalization")) {
    if (*v == "paper_raw") cfg.normalization = Normalization::paper_raw;
    else if (*v == "unit_scaled") cfg.normalization = Normalization::unit_scaled;
    else bad_value("normalization", *v, "expected 'paper_raw' or 'unit_scaled'");
  }
  cfg.validate();
  return cfg;
}

SimulationConfig parse_config(const std::filesystem::path& path, std::optional<DirectionalInterval> default_di) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), default_di);
}

std::string to_text(const SimulationConfig& cfg) {
  std::ostringstream os;
  os << "di_min = " << fmt_double(cfg.di.theta_min()) << '\n'
     << "di_max = " << fmt_double(cfg.di.theta_max()) << '\n'
     << "step_n = " << cfg.step_n << '\n'
     << "step_m = " << cfg.step_m << '\n'
     << "erosion_stop = " << to_string(cfg.erosion_stop) << '\n'
     << "structuring_element = " << (cfg.structuring_element == ElementShape::cross ? "cross" : "square") << '\n'
     << "component_connectivity = " << cfg.component_connectivity << '\n'
     << "interp_radius = " << cfg.interp_radius << '\n'
     << "beta = " << fmt_double(cfg.beta) << '\n'
     << "accept_a = " << fmt_double(cfg.accept_a) << '\n'
     << "b_param = " << fmt_double(cfg.b_param) << '\n'
     << "seed_rows_r = " << cfg.seed_rows_r << '\n'
     << "seed_cols_t = " << cfg.seed_cols_t << '\n'
     << "template_w = " << cfg.template_w << '\n'
     << "template_h = " << cfg.template_h << '\n'
     << "rng_seed = " << cfg.rng_seed << '\n'
     << "normalization = " << to_string(cfg.normalization) << '\n';
  return os.str();
}

std::string config_digest(const SimulationConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : to_text(cfg)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vecsim
