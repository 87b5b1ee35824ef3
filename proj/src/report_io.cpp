#include "cmcb/report_io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

namespace cmcb {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  std::error_code ec;
  if (target.has_parent_path()) {
    fs::create_directories(target.parent_path(), ec);
    if (ec) fail(ErrorCode::IoError, "cannot create '" +
                                        target.parent_path().string() + "'");
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.good())
      fail(ErrorCode::IoError, "short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, target, ec);
  if (ec) fail(ErrorCode::IoError, "cannot rename into '" + path + "'");
}

std::vector<SpectralLine> levels_for(const FiberSpectrum& spec, double bound) {
  std::vector<SpectralLine> lines;
  try {
    lines = spec.enumerate_up_to(bound);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BoundExceedsData) throw;
    for (const auto& line : spec.entries())
      if (line.value <= bound) lines.push_back(line);
  }
  std::vector<SpectralLine> nonzero;
  for (const auto& line : lines)
    if (line.value > 0.0) nonzero.push_back(line);
  return nonzero;
}

std::string scan_csv(const std::vector<ScanSample>& samples,
                     const std::vector<SpectralLine>& levels) {
  std::string out = "r,h,alpha_sq,morse_index";
  for (const auto& level : levels) {
    out += ",level_";
    out += format_double(level.value);
  }
  out += "\n";
  for (const auto& s : samples) {
    out += format_double(s.r);
    out += ",";
    out += format_double(s.h);
    out += ",";
    out += format_double(s.alpha_sq);
    out += ",";
    out += std::to_string(s.morse_index);
    for (const auto& level : levels) {
      out += ",";
      out += format_double(level.value);
    }
    out += "\n";
  }
  return out;
}

std::string index_csv(const std::vector<ScanSample>& samples) {
  std::string out = "r,morse_index\n";
  for (const auto& s : samples) {
    out += format_double(s.r);
    out += ",";
    out += std::to_string(s.morse_index);
    out += "\n";
  }
  return out;
}

std::string spectrum_csv(const std::vector<SpectralLine>& lines) {
  std::string out = "value,multiplicity\n";
  for (const auto& line : lines) {
    out += format_double(line.value);
    out += ",";
    out += std::to_string(line.multiplicity);
    out += "\n";
  }
  return out;
}

ordered_json crossing_to_json(const CrossingEvent& e) {
  ordered_json j;
  j["r_star"] = e.r_star;
  j["bracket"] = {e.bracket.first, e.bracket.second};
  j["eigenvalue"] = e.eigenvalue;
  j["multiplicity"] = e.multiplicity;
  j["direction"] = to_string(e.direction);
  j["index_jump"] = e.index_jump;
  return j;
}

ordered_json touch_to_json(const TouchEvent& t) {
  ordered_json j;
  j["r"] = t.r;
  j["eigenvalue"] = t.eigenvalue;
  j["multiplicity"] = t.multiplicity;
  return j;
}

ordered_json certificate_to_json(const RigidityCertificate& c) {
  ordered_json j;
  j["criterion"] = to_string(c.criterion);
  j["verdict"] = to_string(c.verdict);
  j["margin"] = c.margin;  // NaN serializes as null
  if (c.grid) {
    ordered_json g;
    g["r_min"] = c.grid->r_min;
    g["r_max"] = c.grid->r_max;
    g["points"] = c.grid->points;
    j["grid"] = g;
  } else {
    j["grid"] = nullptr;
  }
  j["scope"] = c.scope;
  return j;
}

ordered_json crossings_json(const std::vector<CrossingEvent>& events,
                            const std::vector<TouchEvent>& touches,
                            const std::string& status) {
  ordered_json j;
  j["status"] = status;
  j["crossings"] = ordered_json::array();
  for (const auto& e : events) j["crossings"].push_back(crossing_to_json(e));
  j["touches"] = ordered_json::array();
  for (const auto& t : touches) j["touches"].push_back(touch_to_json(t));
  return j;
}

ordered_json certificates_json(const std::vector<RigidityCertificate>& certs,
                               const std::vector<std::string>& errors,
                               const std::string& status) {
  ordered_json j;
  j["status"] = status;
  j["certificates"] = ordered_json::array();
  for (const auto& c : certs) j["certificates"].push_back(certificate_to_json(c));
  j["errors"] = errors;
  return j;
}

ordered_json report_json(const BifurcationReport& report,
                         const std::string& status) {
  ordered_json j;
  j["status"] = status;
  j["label"] = report.label;
  j["summary"] = to_string(report.summary);
  j["samples"] = ordered_json::array();
  for (const auto& s : report.samples) {
    ordered_json row;
    row["r"] = s.r;
    row["h"] = s.h;
    row["alpha_sq"] = s.alpha_sq;
    row["morse_index"] = s.morse_index;
    j["samples"].push_back(row);
  }
  j["crossings"] = ordered_json::array();
  for (const auto& e : report.crossings)
    j["crossings"].push_back(crossing_to_json(e));
  j["touches"] = ordered_json::array();
  for (const auto& t : report.touches) j["touches"].push_back(touch_to_json(t));
  j["certificates"] = ordered_json::array();
  for (const auto& c : report.certificates)
    j["certificates"].push_back(certificate_to_json(c));
  j["divergence_lower"] = to_string(report.divergence_lower);
  j["divergence_upper"] = to_string(report.divergence_upper);
  j["divergence"] = to_string(report.divergence);
  j["notes"] = report.notes;
  j["errors"] = report.errors;
  j["warnings"] = report.warnings;
  return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace cmcb
