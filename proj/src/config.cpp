#include "cmcb/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cmcb {

namespace {

[[noreturn]] void config_fail(const std::string& origin, int line,
                              const std::string& msg) {
  std::ostringstream os;
  os << origin;
  if (line > 0) os << ":" << line;
  os << ": " << msg;
  fail(ErrorCode::ConfigError, os.str());
}

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

ConfigValue parse_scalar(const std::string& raw, const std::string& origin,
                         int line_no) {
  ConfigValue v;
  v.line = line_no;
  const std::string s = trim(raw);
  if (s.empty()) config_fail(origin, line_no, "missing value");
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"')
      config_fail(origin, line_no, "unterminated string");
    v.kind = ConfigValue::Kind::String;
    v.text = s.substr(1, s.size() - 2);
    return v;
  }
  if (s == "true" || s == "false") {
    v.kind = ConfigValue::Kind::Bool;
    v.flag = s == "true";
    return v;
  }
  char* end = nullptr;
  const double num = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    config_fail(origin, line_no, "cannot parse value '" + s + "'");
  v.kind = ConfigValue::Kind::Number;
  v.number = num;
  return v;
}

ConfigValue parse_value(const std::string& raw, const std::string& origin,
                        int line_no) {
  const std::string s = trim(raw);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') config_fail(origin, line_no, "unterminated array");
    ConfigValue v;
    v.kind = ConfigValue::Kind::Array;
    v.line = line_no;
    const std::string body = s.substr(1, s.size() - 2);
    std::string item;
    bool in_string = false;
    for (char c : body) {
      if (c == '"') in_string = !in_string;
      if (c == ',' && !in_string) {
        v.items.push_back(parse_scalar(item, origin, line_no));
        item.clear();
      } else {
        item += c;
      }
    }
    if (!trim(item).empty())
      v.items.push_back(parse_scalar(item, origin, line_no));
    return v;
  }
  return parse_scalar(s, origin, line_no);
}

}  // namespace

ConfigFile ConfigFile::parse_string(const std::string& text,
                                    const std::string& origin) {
  ConfigFile cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']')
        config_fail(origin, line_no, "malformed section header");
      section = trim(body.substr(1, body.size() - 2));
      if (section.empty()) config_fail(origin, line_no, "empty section name");
      if (section.find('.') != std::string::npos)
        config_fail(origin, line_no, "nested tables are not supported");
      cfg.sections_[section];
      continue;
    }
    const size_t eq = body.find('=');
    if (eq == std::string::npos)
      config_fail(origin, line_no, "expected key = value");
    const std::string key = trim(body.substr(0, eq));
    if (key.empty()) config_fail(origin, line_no, "empty key");
    if (section.empty())
      config_fail(origin, line_no, "key outside any [section]");
    if (cfg.sections_[section].count(key))
      config_fail(origin, line_no, "duplicate key '" + key + "'");
    cfg.sections_[section][key] =
        parse_value(body.substr(eq + 1), origin, line_no);
  }
  return cfg;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str(), path);
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

const ConfigValue& ConfigFile::get(const std::string& section,
                                   const std::string& key) const {
  const auto s = sections_.find(section);
  if (s == sections_.end() || !s->second.count(key))
    config_fail(origin_, 0, "missing required key [" + section + "] " + key);
  return s->second.at(key);
}

double ConfigFile::number(const std::string& section,
                          const std::string& key) const {
  const ConfigValue& v = get(section, key);
  if (v.kind != ConfigValue::Kind::Number)
    config_fail(origin_, v.line, "[" + section + "] " + key + " must be a number");
  return v.number;
}

double ConfigFile::number_or(const std::string& section, const std::string& key,
                             double fallback) const {
  return has(section, key) ? number(section, key) : fallback;
}

long long ConfigFile::integer(const std::string& section,
                              const std::string& key) const {
  const double v = number(section, key);
  const long long n = static_cast<long long>(v);
  if (static_cast<double>(n) != v)
    config_fail(origin_, get(section, key).line,
                "[" + section + "] " + key + " must be an integer");
  return n;
}

long long ConfigFile::integer_or(const std::string& section,
                                 const std::string& key,
                                 long long fallback) const {
  return has(section, key) ? integer(section, key) : fallback;
}

std::string ConfigFile::text(const std::string& section,
                             const std::string& key) const {
  const ConfigValue& v = get(section, key);
  if (v.kind != ConfigValue::Kind::String)
    config_fail(origin_, v.line, "[" + section + "] " + key + " must be a string");
  return v.text;
}

std::string ConfigFile::text_or(const std::string& section,
                                const std::string& key,
                                const std::string& fallback) const {
  return has(section, key) ? text(section, key) : fallback;
}

std::vector<double> ConfigFile::numbers(const std::string& section,
                                        const std::string& key) const {
  const ConfigValue& v = get(section, key);
  if (v.kind != ConfigValue::Kind::Array)
    config_fail(origin_, v.line, "[" + section + "] " + key + " must be an array");
  std::vector<double> out;
  for (const auto& item : v.items) {
    if (item.kind != ConfigValue::Kind::Number)
      config_fail(origin_, v.line,
                  "[" + section + "] " + key + " must contain numbers only");
    out.push_back(item.number);
  }
  return out;
}

std::vector<std::string> ConfigFile::texts_or(
    const std::string& section, const std::string& key,
    const std::vector<std::string>& fallback) const {
  if (!has(section, key)) return fallback;
  const ConfigValue& v = get(section, key);
  if (v.kind != ConfigValue::Kind::Array)
    config_fail(origin_, v.line, "[" + section + "] " + key + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : v.items) {
    if (item.kind != ConfigValue::Kind::String)
      config_fail(origin_, v.line,
                  "[" + section + "] " + key + " must contain strings only");
    out.push_back(item.text);
  }
  return out;
}

namespace {

ModelBundle build_model(const ConfigFile& cfg) {
  const std::string kind = cfg.text("model", "kind");
  if (kind == "schwarzschild") {
    SchwarzschildParams p;
    p.K = cfg.number("model", "K");
    p.E = cfg.number_or("model", "E", 0.0);
    return schwarzschild_model(p);
  }

  CatalogParams p;
  p.n = static_cast<int>(cfg.integer_or("model", "n", 3));
  p.domain = {cfg.number("model", "r_min"), cfg.number("model", "r_max")};
  p.C = cfg.number_or("model", "C", 1.0);
  p.k = cfg.number_or("model", "k", 2.0);
  if (kind == "desitter_cusp") {
    // the cusp fiber is the torus declared in [fiber]
    if (cfg.text_or("fiber", "kind", "torus") != "torus")
      fail(ErrorCode::ConfigError,
           "desitter_cusp requires [fiber] kind = \"torus\"");
    const int dim =
        static_cast<int>(cfg.integer_or("fiber", "dim", p.n - 1));
    DualLatticeBasis basis;
    basis.dim = dim;
    basis.rows = cfg.numbers("fiber", "basis");
    p.lattice = basis;
  }
  return catalog_model(kind, p);
}

FiberSpectrum build_fiber(const ConfigFile& cfg, ModelBundle& bundle) {
  if (!cfg.has("fiber", "kind")) return bundle.fiber;
  const std::string kind = cfg.text("fiber", "kind");
  const int fiber_dim = bundle.model.n - 1;

  FiberSpectrum fiber = bundle.fiber;
  if (kind == "sphere") {
    const int m = static_cast<int>(cfg.integer_or("fiber", "m", fiber_dim));
    if (m != fiber_dim)
      fail(ErrorCode::ConfigError,
           "sphere fiber dimension m must equal n - 1");
    fiber = sphere_spectrum(m, 100.0);
    const double scalar = static_cast<double>(m) * (m - 1);
    bundle.model.fiber_scalar_curvature = {scalar, scalar};
  } else if (kind == "torus") {
    const int dim = static_cast<int>(cfg.integer_or("fiber", "dim", fiber_dim));
    if (dim != fiber_dim)
      fail(ErrorCode::ConfigError,
           "torus fiber dimension dim must equal n - 1");
    DualLatticeBasis basis;
    basis.dim = dim;
    basis.rows = cfg.numbers("fiber", "basis");
    if (basis.rows.size() != static_cast<size_t>(dim) * dim)
      fail(ErrorCode::ConfigError,
           "torus basis must have dim*dim entries (row-major)");
    fiber = torus_spectrum(basis, 1000.0);
    bundle.model.fiber_scalar_curvature = {0.0, 0.0};
  } else if (kind == "explicit") {
    const std::vector<double> values = cfg.numbers("fiber", "values");
    const std::vector<double> mults = cfg.numbers("fiber", "multiplicities");
    if (values.size() != mults.size())
      fail(ErrorCode::ConfigError,
           "values and multiplicities must have equal length");
    std::vector<SpectralLine> lines;
    for (size_t i = 0; i < values.size(); ++i)
      lines.push_back({values[i], static_cast<std::int64_t>(mults[i])});
    fiber = explicit_spectrum(std::move(lines));
    bundle.model.fiber_scalar_curvature.reset();
  } else {
    fail(ErrorCode::ConfigError, "unknown fiber kind '" + kind + "'");
  }

  if (cfg.has("fiber", "scalar_min") || cfg.has("fiber", "scalar_max")) {
    const double lo = cfg.number("fiber", "scalar_min");
    const double hi = cfg.number_or("fiber", "scalar_max", lo);
    bundle.model.fiber_scalar_curvature = {lo, hi};
  }
  return fiber;
}

}  // namespace

Analysis load_analysis(const std::string& path) {
  const ConfigFile cfg = ConfigFile::parse_file(path);

  ModelBundle bundle = build_model(cfg);
  FiberSpectrum fiber = build_fiber(cfg, bundle);

  if (cfg.has("scan", "epsilon")) {
    const double eps = cfg.number("scan", "epsilon");
    if (!(eps > 0.0))
      fail(ErrorCode::ConfigError, "[scan] epsilon must be positive");
    bundle.model.epsilon = eps;
    if (!(bundle.model.usable().lo < bundle.model.usable().hi))
      fail(ErrorCode::ConfigError,
           "[scan] epsilon leaves an empty usable domain");
  }

  AnalyzeConfig ac;
  ac.grid.r_min = cfg.number("scan", "r_min");
  ac.grid.r_max = cfg.number("scan", "r_max");
  ac.grid.points = static_cast<int>(cfg.integer_or("scan", "points", 1000));
  ac.crossing_tol = cfg.number_or("scan", "tol", 1e-10);
  ac.degeneracy_tol = cfg.number_or("scan", "degeneracy_tol", 1e-9);
  if (!(ac.grid.r_min < ac.grid.r_max))
    fail(ErrorCode::ConfigError, "[scan] requires r_min < r_max");
  if (ac.grid.points < 2)
    fail(ErrorCode::ConfigError, "[scan] points must be at least 2");
  if (!(ac.crossing_tol > 0.0) || !(ac.degeneracy_tol > 0.0))
    fail(ErrorCode::ConfigError, "[scan] tolerances must be positive");
  {
    const Interval u = bundle.model.usable();
    if (!u.contains(ac.grid.r_min) || !u.contains(ac.grid.r_max))
      fail(ErrorCode::ConfigError,
           "[scan] window must lie inside the model domain after epsilon "
           "clamping");
  }

  ac.divergence.samples =
      static_cast<int>(cfg.integer_or("divergence", "samples", 24));
  ac.divergence.growth_factor =
      cfg.number_or("divergence", "growth_factor", 0.5);
  if (cfg.has("divergence", "threshold"))
    ac.divergence.threshold = cfg.number("divergence", "threshold");
  if (ac.divergence.samples < 8)
    fail(ErrorCode::ConfigError, "[divergence] samples must be at least 8");
  if (!(ac.divergence.growth_factor > 0.0 &&
        ac.divergence.growth_factor < 1.0))
    fail(ErrorCode::ConfigError,
         "[divergence] growth_factor must lie in (0, 1)");

  OutputOptions out;
  out.directory = cfg.text_or("output", "directory", "out");
  const auto formats = cfg.texts_or("output", "formats", {"csv", "json"});
  out.csv = out.json = false;
  for (const auto& f : formats) {
    if (f == "csv")
      out.csv = true;
    else if (f == "json")
      out.json = true;
    else
      fail(ErrorCode::ConfigError, "unknown output format '" + f + "'");
  }

  Analysis a{std::move(bundle.model), std::move(fiber), ac, out,
             cfg.number_or("fiber", "bound", 100.0)};
  return a;
}

}  // namespace cmcb
