#include "cmcb/bifurcation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

namespace cmcb {

namespace {

/// Relative half-width of the band around h(r) = mu inside which a grid
/// sample counts as touching the level.
constexpr double kTouchRel = 1e-9;

int thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("CMCB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1 && v < 1024)
      hw = std::min(hw, static_cast<unsigned>(v));
  }
  return static_cast<int>(hw);
}

/// Runs body(i) for i in [0, n). Partitioned across workers when worth
/// it; every result is written to its own slot, so the output does not
/// depend on the partition.
template <class Body>
void parallel_for(int n, Body&& body) {
  const int threads =
      std::min(thread_cap(), std::max(1, n / 512));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const int lo = t * chunk;
      const int hi = std::min(n, lo + chunk);
      try {
        for (int i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

double degeneracy_band(double h, double tol) {
  return tol * std::max(1.0, std::abs(h));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

/// Morse index of a sampled h value against a cached eigenvalue list that
/// covers at least max(h,0) + 2 band. Returns nullopt at degenerate
/// samples.
std::optional<std::int64_t> index_from_lines(
    const std::vector<SpectralLine>& lines, double h, double tol) {
  const double band = degeneracy_band(h, tol);
  std::int64_t index = 0;
  for (const auto& line : lines) {
    if (!(line.value > 0.0)) continue;
    if (std::abs(line.value - h) <= band) return std::nullopt;
    if (line.value < h) index += line.multiplicity;
  }
  return index;
}

std::vector<SpectralLine> lines_for_index(const FiberSpectrum& spec, double h,
                                          double tol) {
  return spec.enumerate_up_to(std::max(h, 0.0) + 2.0 * degeneracy_band(h, tol));
}

void validate_grid(const WarpedModel& model, const SamplingGrid& grid) {
  if (grid.points < 2)
    fail(ErrorCode::InvalidParams, "sampling grid needs at least 2 points");
  const Interval u = model.usable();
  if (!(grid.r_min < grid.r_max) || !u.contains(grid.r_min) ||
      !u.contains(grid.r_max))
    fail(ErrorCode::DomainError,
         "sampling grid [" + fmt(grid.r_min) + ", " + fmt(grid.r_max) +
             "] must lie strictly inside the usable domain (" + fmt(u.lo) +
             ", " + fmt(u.hi) + ")");
}

std::string sampled_scope(const SamplingGrid& grid) {
  std::ostringstream os;
  os << "inequality sampled on " << grid.points << " nodes of ["
     << fmt(grid.r_min) << ", " << fmt(grid.r_max)
     << "]; a sampled claim, not a continuum proof";
  return os.str();
}

RigidityVerdict verdict_from_margin(double margin, double tol) {
  if (std::abs(margin) <= tol) return RigidityVerdict::InconclusiveDegenerate;
  return margin > 0.0 ? RigidityVerdict::Certified
                      : RigidityVerdict::NotCertified;
}

}  // namespace

double shifted_eigenvalue(const WarpedModel& model, const FiberSpectrum& spec,
                          double value, double r) {
  (void)spec;
  if (value == 0.0)
    fail(ErrorCode::ZeroModeQueried,
         "the zero fiber mode is excluded by the volume constraint");
  const StabilityJet jet = stability_jet(model, r);
  const double h = (model.n - 1) * (jet.alpha_dot_sq - jet.alpha_ddot_alpha);
  return (value - h) / jet.alpha_sq;
}

std::int64_t morse_index(const WarpedModel& model, const FiberSpectrum& spec,
                         double r, double degeneracy_tol) {
  if (!(degeneracy_tol > 0.0))
    fail(ErrorCode::InvalidParams, "degeneracy_tol must be positive");
  const double h = stability_h(model, r);
  const auto lines = lines_for_index(spec, h, degeneracy_tol);
  const auto index = index_from_lines(lines, h, degeneracy_tol);
  if (!index)
    fail(ErrorCode::DegeneratePoint,
         "an eigenvalue lies within the degeneracy band of h(" + fmt(r) +
             ") = " + fmt(h) + "; the second variation is singular there");
  return *index;
}

std::vector<ScanSample> scan_profile(const WarpedModel& model,
                                     const FiberSpectrum& spec,
                                     const SamplingGrid& grid,
                                     double degeneracy_tol) {
  if (!(degeneracy_tol > 0.0))
    fail(ErrorCode::InvalidParams, "degeneracy_tol must be positive");
  validate_grid(model, grid);
  std::vector<ScanSample> samples(static_cast<size_t>(grid.points));
  parallel_for(grid.points, [&](int i) {
    auto& s = samples[static_cast<size_t>(i)];
    s.r = grid.node(i);
    const StabilityJet jet = stability_jet(model, s.r);
    s.alpha_sq = jet.alpha_sq;
    s.h = (model.n - 1) * (jet.alpha_dot_sq - jet.alpha_ddot_alpha);
  });
  double max_bound = 0.0;
  for (const auto& s : samples)
    max_bound = std::max(
        max_bound,
        std::max(s.h, 0.0) + 2.0 * degeneracy_band(s.h, degeneracy_tol));
  const auto lines = spec.enumerate_up_to(max_bound);
  for (auto& s : samples) {
    const auto index = index_from_lines(lines, s.h, degeneracy_tol);
    s.morse_index = index ? *index : -1;
  }
  return samples;
}

namespace {

CrossingEvent bisect_crossing(const WarpedModel& model, double mu,
                              std::int64_t mult, double a, double b,
                              bool a_negative, double tol) {
  while (b - a > tol) {
    double mid = a + 0.5 * (b - a);
    if (mid <= a || mid >= b) break;
    double fm = stability_h(model, mid) - mu;
    if (fm == 0.0) {
      // step off an exact zero so the bracket ends keep strict signs
      mid = a + 0.49998474121093750 * (b - a);
      if (mid <= a || mid >= b) break;
      fm = stability_h(model, mid) - mu;
      if (fm == 0.0) break;
    }
    if ((fm < 0.0) == a_negative)
      a = mid;
    else
      b = mid;
  }
  CrossingEvent ev;
  ev.r_star = a + 0.5 * (b - a);
  ev.bracket = {a, b};
  ev.eigenvalue = mu;
  ev.multiplicity = mult;
  ev.direction = a_negative ? CrossingDirection::Up : CrossingDirection::Down;
  ev.index_jump = a_negative ? mult : -mult;
  return ev;
}

void scan_level(const WarpedModel& model, double mu, std::int64_t mult,
                const std::vector<double>& rs, const std::vector<double>& hs,
                double tol, CrossingScan& out) {
  const double band = kTouchRel * std::max(1.0, std::abs(mu));
  int last_sign = 0;
  double last_r = 0.0;
  std::vector<int> zero_run;
  auto flush_touch = [&] {
    if (zero_run.empty()) return;
    const int mid = zero_run[zero_run.size() / 2];
    out.touches.push_back({rs[static_cast<size_t>(mid)], mu, mult});
    zero_run.clear();
  };
  for (size_t i = 0; i < rs.size(); ++i) {
    const double g = hs[i] - mu;
    if (std::abs(g) <= band) {
      zero_run.push_back(static_cast<int>(i));
      continue;
    }
    const int sign = g > 0.0 ? 1 : -1;
    if (!zero_run.empty()) {
      if (last_sign == 0 || last_sign == sign)
        flush_touch();  // level reached without a sign change
      else
        zero_run.clear();  // the sign change below brackets the run
    }
    if (last_sign != 0 && sign != last_sign)
      out.events.push_back(bisect_crossing(model, mu, mult, last_r, rs[i],
                                           last_sign < 0, tol));
    last_sign = sign;
    last_r = rs[i];
  }
  flush_touch();  // level run truncated by the scan window: inconclusive
}

}  // namespace

CrossingScan find_crossings(const WarpedModel& model, const FiberSpectrum& spec,
                            Interval interval, int grid_points, double tol) {
  if (grid_points < 2)
    fail(ErrorCode::InvalidParams, "need at least 2 grid points");
  if (!(tol > 0.0)) fail(ErrorCode::InvalidParams, "tol must be positive");
  const SamplingGrid grid{interval.lo, interval.hi, grid_points};
  validate_grid(model, grid);

  std::vector<double> rs(static_cast<size_t>(grid_points));
  std::vector<double> hs(static_cast<size_t>(grid_points));
  parallel_for(grid_points, [&](int i) {
    rs[static_cast<size_t>(i)] = grid.node(i);
    hs[static_cast<size_t>(i)] = stability_h(model, rs[static_cast<size_t>(i)]);
  });

  double max_h = hs[0];
  for (double h : hs) max_h = std::max(max_h, h);
  const double bound = max_h + kTouchRel * std::max(1.0, std::abs(max_h));

  CrossingScan out;
  if (!(bound > 0.0)) return out;

  std::vector<SpectralLine> lines;
  try {
    lines = spec.enumerate_up_to(bound);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BoundExceedsData)
      fail(ErrorCode::SpectrumBoundExceeded,
           std::string("the fiber spectrum cannot be enumerated up to the "
                       "sampled maximum of h (") +
               e.what() + ")");
    throw;
  }

  for (const auto& line : lines) {
    if (!(line.value > 0.0)) continue;
    scan_level(model, line.value, line.multiplicity, rs, hs, tol, out);
  }
  std::sort(out.events.begin(), out.events.end(),
            [](const CrossingEvent& l, const CrossingEvent& r) {
              if (l.r_star != r.r_star) return l.r_star < r.r_star;
              return l.eigenvalue < r.eigenvalue;
            });
  std::sort(out.touches.begin(), out.touches.end(),
            [](const TouchEvent& l, const TouchEvent& r) {
              if (l.r != r.r) return l.r < r.r;
              return l.eigenvalue < r.eigenvalue;
            });
  return out;
}

std::optional<WitnessResult> theorem2_witness(const WarpedModel& model,
                                              const FiberSpectrum& spec,
                                              double r_a, double r_b,
                                              double degeneracy_tol) {
  if (!(r_a < r_b)) fail(ErrorCode::InvalidParams, "requires r_a < r_b");
  if (!(degeneracy_tol > 0.0))
    fail(ErrorCode::InvalidParams, "degeneracy_tol must be positive");
  const double h_a = stability_h(model, r_a);
  const double h_b = stability_h(model, r_b);

  for (const auto& [r, h] : {std::pair{r_a, h_a}, std::pair{r_b, h_b}}) {
    const double band = degeneracy_band(h, degeneracy_tol);
    for (const auto& line : lines_for_index(spec, h, degeneracy_tol)) {
      if (line.value > 0.0 && std::abs(line.value - h) <= band)
        fail(ErrorCode::DegenerateEndpoint,
             "shifted eigenvalue vanishes at r = " + fmt(r) +
                 " (h = " + fmt(h) + " meets the fiber eigenvalue " +
                 fmt(line.value) + ")");
    }
  }

  const std::int64_t index_a = morse_index(model, spec, r_a, degeneracy_tol);
  const std::int64_t index_b = morse_index(model, spec, r_b, degeneracy_tol);

  const double lo = std::min(h_a, h_b);
  const double hi = std::max(h_a, h_b);
  std::optional<double> witness;
  for (const auto& line : spec.enumerate_up_to(hi)) {
    if (line.value > 0.0 && line.value > lo && line.value < hi) {
      witness = line.value;
      break;
    }
  }
  if (!witness || index_a == index_b) return std::nullopt;
  return WitnessResult{*witness, index_a, index_b};
}

RigidityCertificate certify_no_bifurcation(const WarpedModel& model,
                                           const FiberSpectrum& spec,
                                           const SamplingGrid& grid,
                                           double degeneracy_tol) {
  validate_grid(model, grid);
  const double mu1 = spec.first_nonzero();
  const double target = mu1 / static_cast<double>(model.n - 1);

  std::vector<double> v(static_cast<size_t>(grid.points));
  parallel_for(grid.points, [&](int i) {
    const StabilityJet jet = stability_jet(model, grid.node(i));
    v[static_cast<size_t>(i)] = jet.alpha_dot_sq - jet.alpha_ddot_alpha;
  });
  double vmax = v[0];
  for (double x : v) vmax = std::max(vmax, x);

  RigidityCertificate cert;
  cert.criterion = RigidityCriterion::Prop23;
  cert.margin = target - vmax;
  cert.verdict = verdict_from_margin(cert.margin, degeneracy_tol);
  cert.grid = grid;
  cert.scope = sampled_scope(grid);
  return cert;
}

RigidityCertificate certify_corsc(const WarpedModel& model,
                                  const FiberSpectrum& spec,
                                  std::optional<double> fiber_scalar_max,
                                  const SamplingGrid& grid,
                                  double degeneracy_tol) {
  validate_grid(model, grid);
  double fiber_hi = 0.0;
  if (fiber_scalar_max)
    fiber_hi = *fiber_scalar_max;
  else if (model.fiber_scalar_curvature)
    fiber_hi = model.fiber_scalar_curvature->second;
  else
    fail(ErrorCode::MissingFiberCurvature,
         "the model carries no fiber scalar-curvature data");
  const double fiber_lo = model.fiber_scalar_curvature
                              ? model.fiber_scalar_curvature->first
                              : fiber_hi;

  const double mu1 = spec.first_nonzero();
  const double n_ratio =
      static_cast<double>(model.n) / static_cast<double>(model.n - 1);

  std::vector<double> slack(static_cast<size_t>(grid.points));
  parallel_for(grid.points, [&](int i) {
    const double r = grid.node(i);
    const double ambient = scalar_curvature(model, r, fiber_hi);
    const GeometricInvariants inv = geometric_invariants(model, r);
    const double alpha_sq = stability_jet(model, r).alpha_sq;
    const double lhs = alpha_sq * (ambient + n_ratio * inv.H * inv.H);
    slack[static_cast<size_t>(i)] = 2.0 * mu1 + fiber_lo - lhs;
  });
  double margin = slack[0];
  for (double x : slack) margin = std::min(margin, x);

  RigidityCertificate cert;
  cert.criterion = RigidityCriterion::CorScalar;
  cert.margin = margin;
  cert.verdict = verdict_from_margin(margin, degeneracy_tol);
  cert.grid = grid;
  cert.scope = sampled_scope(grid);
  return cert;
}

DivergenceClass divergence_test(const WarpedModel& model, DomainEnd end,
                                const DivergenceConfig& config) {
  if (config.samples < 8)
    fail(ErrorCode::InvalidParams, "need at least 8 samples");
  if (!(config.growth_factor > 0.0 && config.growth_factor < 1.0))
    fail(ErrorCode::InvalidParams, "growth_factor must lie in (0, 1)");
  if (!(config.threshold == config.threshold))
    fail(ErrorCode::InvalidParams, "threshold must be set");

  const Interval usable = model.usable();
  const Interval domain = model.warp.domain();
  const double endpoint = end == DomainEnd::Lower ? domain.lo : domain.hi;

  double ref;
  if (usable.bounded())
    ref = 0.5 * (usable.lo + usable.hi);
  else if (std::isfinite(usable.lo))
    ref = usable.lo + std::max(1.0, std::abs(usable.lo));
  else if (std::isfinite(usable.hi))
    ref = usable.hi - std::max(1.0, std::abs(usable.hi));
  else
    ref = 0.0;

  std::vector<double> points;
  points.reserve(static_cast<size_t>(config.samples));
  if (std::isfinite(endpoint)) {
    const double floor_r = end == DomainEnd::Lower ? usable.lo : usable.hi;
    const double d0 = std::abs(ref - endpoint);
    double d = d0;
    for (int k = 0; k < config.samples; ++k) {
      const double r = end == DomainEnd::Lower ? endpoint + d : endpoint - d;
      if (end == DomainEnd::Lower ? r < floor_r : r > floor_r) break;
      points.push_back(r);
      d *= config.growth_factor;
    }
  } else {
    const double scale = std::max(1.0, std::abs(ref));
    double step = 0.0;
    for (int k = 0; k < config.samples; ++k) {
      const double r = end == DomainEnd::Upper ? ref + step : ref - step;
      if (!std::isfinite(r)) break;
      points.push_back(r);
      step = step == 0.0 ? scale : step / config.growth_factor;
    }
  }
  if (points.size() < 4) return DivergenceClass::Undetermined;

  std::vector<double> values(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    const StabilityJet jet = stability_jet(model, points[i]);
    values[i] = jet.alpha_dot_sq - jet.alpha_ddot_alpha;
    if (values[i] != values[i]) return DivergenceClass::Undetermined;
  }

  const size_t tail = std::max<size_t>(4, values.size() / 2);
  const size_t start = values.size() - tail;
  bool increasing = true;
  double lo = values[start], hi = values[start], scale = std::abs(values[start]);
  for (size_t i = start + 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) increasing = false;
    lo = std::min(lo, values[i]);
    hi = std::max(hi, values[i]);
    scale = std::max(scale, std::abs(values[i]));
  }
  if (increasing && values.back() > config.threshold)
    return DivergenceClass::Divergent;
  if (hi - lo <= 0.05 * std::max(1.0, scale)) return DivergenceClass::Bounded;
  return DivergenceClass::Undetermined;
}

RigidityCertificate check_general_rigidity(const GeneralRigidityData& data) {
  if (!(data.mu1 > 0.0))
    fail(ErrorCode::InvalidParams, "mu1 must be positive");

  RigidityCertificate cert;
  cert.scope = "pointwise check on user-supplied family data";

  const double theorem1_margin = data.mu1 - data.Q;
  if (theorem1_margin > 0.0) {
    cert.criterion = RigidityCriterion::Theorem1;
    cert.verdict = RigidityVerdict::Certified;
    cert.margin = theorem1_margin;
    return cert;
  }
  const bool ricci_nonpositive =
      data.hypersurface_ricci == RicciClass::NonPositive ||
      data.hypersurface_ricci == RicciClass::Flat;
  if (data.hypersurface_convex && ricci_nonpositive) {
    cert.criterion = RigidityCriterion::Corollary1_i;
    cert.verdict = RigidityVerdict::Certified;
    return cert;  // boolean criterion, no numeric margin
  }
  if (data.Q <= 0.0) {
    cert.criterion = RigidityCriterion::Corollary1_ii;
    cert.verdict = RigidityVerdict::Certified;
    cert.margin = -data.Q;
    return cert;
  }
  if (data.hypersurface_ricci == RicciClass::Flat &&
      data.mu1 >= data.sff_norm_sq) {
    cert.criterion = RigidityCriterion::Corollary1_iii;
    cert.verdict = RigidityVerdict::Certified;
    cert.margin = data.mu1 - data.sff_norm_sq;
    return cert;
  }
  cert.criterion = RigidityCriterion::Theorem1;
  cert.verdict = RigidityVerdict::NotCertified;
  cert.margin = theorem1_margin;
  return cert;
}

BifurcationReport analyze(const WarpedModel& model, const FiberSpectrum& spec,
                          const AnalyzeConfig& config) {
  BifurcationReport report;
  report.label = model.label;
  report.warnings = model.warnings;

  auto record = [&report](const char* step, const std::exception& e) {
    report.errors.push_back(std::string(step) + ": " + e.what());
  };

  double mu1 = std::numeric_limits<double>::quiet_NaN();
  try {
    mu1 = spec.first_nonzero();
  } catch (const std::exception& e) {
    record("spectrum", e);
  }

  bool degenerate_samples = false;
  try {
    report.samples =
        scan_profile(model, spec, config.grid, config.degeneracy_tol);
    for (const auto& s : report.samples)
      if (s.morse_index < 0) degenerate_samples = true;
  } catch (const std::exception& e) {
    record("scan", e);
  }

  try {
    CrossingScan scan =
        find_crossings(model, spec, {config.grid.r_min, config.grid.r_max},
                       config.grid.points, config.crossing_tol);
    report.crossings = std::move(scan.events);
    report.touches = std::move(scan.touches);
  } catch (const std::exception& e) {
    record("crossings", e);
  }

  try {
    report.certificates.push_back(certify_no_bifurcation(
        model, spec, config.grid, config.degeneracy_tol));
  } catch (const std::exception& e) {
    record("certify_no_bifurcation", e);
  }
  try {
    report.certificates.push_back(certify_corsc(
        model, spec, std::nullopt, config.grid, config.degeneracy_tol));
  } catch (const std::exception& e) {
    record("certify_corsc", e);
  }

  DivergenceConfig div = config.divergence;
  if (!(div.threshold == div.threshold))
    div.threshold = mu1 == mu1 ? 1e3 * mu1 : 1e3;
  try {
    report.divergence_lower = divergence_test(model, DomainEnd::Lower, div);
  } catch (const std::exception& e) {
    record("divergence_lower", e);
  }
  try {
    report.divergence_upper = divergence_test(model, DomainEnd::Upper, div);
  } catch (const std::exception& e) {
    record("divergence_upper", e);
  }
  if (report.divergence_lower == DivergenceClass::Divergent ||
      report.divergence_upper == DivergenceClass::Divergent) {
    report.divergence = DivergenceClass::Divergent;
    report.notes.push_back(
        "the stability function grows without bound toward an endpoint, so "
        "the family crosses every sufficiently large fiber eigenvalue and "
        "bifurcation radii accumulate there");
  } else if (report.divergence_lower == DivergenceClass::Bounded &&
             report.divergence_upper == DivergenceClass::Bounded) {
    report.divergence = DivergenceClass::Bounded;
  } else {
    report.divergence = DivergenceClass::Undetermined;
  }

  const bool any_certified =
      std::any_of(report.certificates.begin(), report.certificates.end(),
                  [](const RigidityCertificate& c) {
                    return c.verdict == RigidityVerdict::Certified;
                  });
  const bool any_degenerate =
      std::any_of(report.certificates.begin(), report.certificates.end(),
                  [](const RigidityCertificate& c) {
                    return c.verdict == RigidityVerdict::InconclusiveDegenerate;
                  });
  if (!report.crossings.empty())
    report.summary = SummaryVerdict::BifurcationFound;
  else if (any_certified)
    report.summary = SummaryVerdict::RigidCertified;
  else if (any_degenerate || degenerate_samples)
    report.summary = SummaryVerdict::Degenerate;
  else
    report.summary = SummaryVerdict::Inconclusive;
  return report;
}

const char* to_string(CrossingDirection d) {
  return d == CrossingDirection::Up ? "up" : "down";
}

const char* to_string(RigidityCriterion c) {
  switch (c) {
    case RigidityCriterion::Theorem1: return "theorem1";
    case RigidityCriterion::Corollary1_i: return "corollary1_i";
    case RigidityCriterion::Corollary1_ii: return "corollary1_ii";
    case RigidityCriterion::Corollary1_iii: return "corollary1_iii";
    case RigidityCriterion::Prop23: return "prop23";
    case RigidityCriterion::CorScalar: return "corscalar";
  }
  return "unknown";
}

const char* to_string(RigidityVerdict v) {
  switch (v) {
    case RigidityVerdict::Certified: return "certified";
    case RigidityVerdict::NotCertified: return "notcertified";
    case RigidityVerdict::InconclusiveDegenerate: return "inconclusivedegenerate";
  }
  return "unknown";
}

const char* to_string(DivergenceClass c) {
  switch (c) {
    case DivergenceClass::Divergent: return "divergent";
    case DivergenceClass::Bounded: return "bounded";
    case DivergenceClass::Undetermined: return "undetermined";
  }
  return "unknown";
}

const char* to_string(SummaryVerdict v) {
  switch (v) {
    case SummaryVerdict::RigidCertified: return "rigidcertified";
    case SummaryVerdict::BifurcationFound: return "bifurcationfound";
    case SummaryVerdict::Degenerate: return "degenerate";
    case SummaryVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

}  // namespace cmcb
