#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cmcb/config.hpp"
#include "cmcb/report_io.hpp"

namespace {

namespace fs = std::filesystem;
using cmcb::Analysis;
using cmcb::ordered_json;

fs::path out_path(const Analysis& a, const char* name) {
  return fs::path(a.output.directory) / name;
}

void emit_json(const Analysis& a, const char* name, const ordered_json& j) {
  if (!a.output.json) return;
  cmcb::write_file_atomic(out_path(a, name).string(), cmcb::dump_json(j));
}

void emit_csv(const Analysis& a, const char* name, const std::string& body) {
  if (!a.output.csv) return;
  cmcb::write_file_atomic(out_path(a, name).string(), body);
}

int run_scan(const Analysis& a) {
  const auto samples =
      cmcb::scan_profile(a.model, a.fiber, a.config.grid, a.config.degeneracy_tol);
  double max_h = samples.front().h;
  for (const auto& s : samples) max_h = std::max(max_h, s.h);
  emit_csv(a, "scan.csv", cmcb::scan_csv(samples, cmcb::levels_for(a.fiber, max_h)));
  return 0;
}

int run_index(const Analysis& a) {
  const auto samples =
      cmcb::scan_profile(a.model, a.fiber, a.config.grid, a.config.degeneracy_tol);
  emit_csv(a, "index.csv", cmcb::index_csv(samples));
  return 0;
}

int run_crossings(const Analysis& a) {
  try {
    const cmcb::CrossingScan scan = cmcb::find_crossings(
        a.model, a.fiber, {a.config.grid.r_min, a.config.grid.r_max},
        a.config.grid.points, a.config.crossing_tol);
    emit_json(a, "crossings.json",
              cmcb::crossings_json(scan.events, scan.touches, "ok"));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "cmcb: crossings failed: " << e.what() << "\n";
    ordered_json j = cmcb::crossings_json({}, {}, "error");
    j["errors"] = ordered_json::array({e.what()});
    emit_json(a, "crossings.json", j);
    return 3;
  }
}

int run_certify(const Analysis& a) {
  std::vector<cmcb::RigidityCertificate> certs;
  std::vector<std::string> errors;
  try {
    certs.push_back(cmcb::certify_no_bifurcation(
        a.model, a.fiber, a.config.grid, a.config.degeneracy_tol));
  } catch (const std::exception& e) {
    errors.push_back(std::string("certify_no_bifurcation: ") + e.what());
  }
  try {
    certs.push_back(cmcb::certify_corsc(a.model, a.fiber, std::nullopt,
                                        a.config.grid, a.config.degeneracy_tol));
  } catch (const std::exception& e) {
    errors.push_back(std::string("certify_corsc: ") + e.what());
  }
  const bool degenerate = std::any_of(
      certs.begin(), certs.end(), [](const cmcb::RigidityCertificate& c) {
        return c.verdict == cmcb::RigidityVerdict::InconclusiveDegenerate;
      });
  std::string status = "ok";
  int code = 0;
  if (!errors.empty()) {
    status = "error";
    code = 3;
  } else if (degenerate) {
    status = "degenerate";
    code = 3;
  }
  for (const auto& e : errors) std::cerr << "cmcb: " << e << "\n";
  if (degenerate)
    std::cerr << "cmcb: a certificate margin lies inside the degeneracy band\n";
  emit_json(a, "certificates.json", cmcb::certificates_json(certs, errors, status));
  return code;
}

int run_spectrum(const Analysis& a) {
  const auto lines = a.fiber.enumerate_up_to(a.spectrum_bound);
  emit_csv(a, "spectrum.csv", cmcb::spectrum_csv(lines));
  return 0;
}

int run_analyze(const Analysis& a) {
  const cmcb::BifurcationReport report =
      cmcb::analyze(a.model, a.fiber, a.config);

  std::string status = "ok";
  if (!report.errors.empty())
    status = "error";
  else if (report.summary == cmcb::SummaryVerdict::Degenerate)
    status = "degenerate";

  emit_json(a, "report.json", cmcb::report_json(report, status));
  emit_json(a, "crossings.json",
            cmcb::crossings_json(report.crossings, report.touches, status));
  emit_json(a, "certificates.json",
            cmcb::certificates_json(report.certificates, report.errors, status));
  if (!report.samples.empty()) {
    double max_h = report.samples.front().h;
    for (const auto& s : report.samples) max_h = std::max(max_h, s.h);
    emit_csv(a, "scan.csv",
             cmcb::scan_csv(report.samples, cmcb::levels_for(a.fiber, max_h)));
  }

  for (const auto& e : report.errors) std::cerr << "cmcb: " << e << "\n";
  if (status == "degenerate")
    std::cerr << "cmcb: analysis is degenerate (singular second variation); "
                 "neither rigidity nor bifurcation is decidable\n";
  std::cout << "verdict: " << cmcb::to_string(report.summary) << "\n";
  return status == "ok" ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cmcb - rigidity and bifurcation analysis of the constant-mean-"
      "curvature slices of a warped product"};
  app.require_subcommand(1);

  std::string config_path;
  const auto add = [&](const char* name, const char* desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("config", config_path, "analysis config (TOML subset)")
        ->required();
    return cmd;
  };
  CLI::App* cmd_analyze = add(
      "analyze", "run the full pipeline and write report.json + companions");
  CLI::App* cmd_scan =
      add("scan", "write scan.csv: r, h, alpha_sq, morse_index and levels");
  CLI::App* cmd_crossings =
      add("crossings", "locate eigenvalue crossings; write crossings.json");
  CLI::App* cmd_certify =
      add("certify", "evaluate rigidity certificates; write certificates.json");
  CLI::App* cmd_index = add("index", "write index.csv: r, morse_index");
  CLI::App* cmd_spectrum =
      add("spectrum", "write spectrum.csv: value, multiplicity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Analysis* analysis = nullptr;
  try {
    static Analysis a = cmcb::load_analysis(config_path);
    analysis = &a;
  } catch (const std::exception& e) {
    std::cerr << "cmcb: config error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_analyze->parsed()) return run_analyze(*analysis);
    if (cmd_scan->parsed()) return run_scan(*analysis);
    if (cmd_crossings->parsed()) return run_crossings(*analysis);
    if (cmd_certify->parsed()) return run_certify(*analysis);
    if (cmd_index->parsed()) return run_index(*analysis);
    if (cmd_spectrum->parsed()) return run_spectrum(*analysis);
  } catch (const std::exception& e) {
    std::cerr << "cmcb: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
