#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmcb/spectrum.hpp"
#include "cmcb/warping.hpp"

namespace cmcb {

enum class CrossingDirection { Up, Down };

/// A located root of h(r) = mu for one distinct fiber eigenvalue mu.
/// The Morse index jumps by +-multiplicity across r_star.
struct CrossingEvent {
  double r_star = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  double eigenvalue = 0.0;
  std::int64_t multiplicity = 0;
  CrossingDirection direction = CrossingDirection::Up;
  std::int64_t index_jump = 0;
};

/// A grid location where h - mu reaches zero without changing sign
/// (tangential contact). Inconclusive: never counted as a bifurcation.
struct TouchEvent {
  double r = 0.0;
  double eigenvalue = 0.0;
  std::int64_t multiplicity = 0;
};

struct CrossingScan {
  std::vector<CrossingEvent> events;
  std::vector<TouchEvent> touches;
};

enum class RigidityCriterion {
  Theorem1,
  Corollary1_i,
  Corollary1_ii,
  Corollary1_iii,
  Prop23,
  CorScalar,
};

enum class RigidityVerdict { Certified, NotCertified, InconclusiveDegenerate };

/// Uniform closed sampling grid r_min, ..., r_max with `points` nodes.
struct SamplingGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  int points = 0;

  double node(int i) const {
    if (points == 1) return r_min;
    return r_min + (r_max - r_min) * static_cast<double>(i) /
                       static_cast<double>(points - 1);
  }
};

/// Outcome of one rigidity criterion. `margin` is the minimum
/// strict-inequality slack over the sampled grid; a grid certificate is a
/// sampled claim, not a proof over the continuum, and `scope` records that.
struct RigidityCertificate {
  RigidityCriterion criterion = RigidityCriterion::Prop23;
  RigidityVerdict verdict = RigidityVerdict::NotCertified;
  double margin = std::numeric_limits<double>::quiet_NaN();
  std::optional<SamplingGrid> grid;
  std::string scope;
};

enum class DivergenceClass { Divergent, Bounded, Undetermined };
enum class DomainEnd { Lower, Upper };

/// Sampling policy for the endpoint divergence classifier. The distance
/// to the endpoint shrinks by growth_factor per step (escapes
/// geometrically when the endpoint is infinite). A non-finite threshold
/// is resolved by analyze() to 1e3 * mu_1.
struct DivergenceConfig {
  int samples = 24;
  double growth_factor = 0.5;
  double threshold = std::numeric_limits<double>::quiet_NaN();
};

struct ScanSample {
  double r = 0.0;
  double h = 0.0;
  double alpha_sq = 0.0;
  std::int64_t morse_index = 0;  // -1 marks a degenerate sample
};

enum class SummaryVerdict {
  RigidCertified,
  BifurcationFound,
  Degenerate,
  Inconclusive,
};

struct BifurcationReport {
  std::string label;
  std::vector<ScanSample> samples;
  std::vector<CrossingEvent> crossings;
  std::vector<TouchEvent> touches;
  std::vector<RigidityCertificate> certificates;
  DivergenceClass divergence_lower = DivergenceClass::Undetermined;
  DivergenceClass divergence_upper = DivergenceClass::Undetermined;
  DivergenceClass divergence = DivergenceClass::Undetermined;
  SummaryVerdict summary = SummaryVerdict::Inconclusive;
  std::vector<std::string> notes;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
};

enum class RicciClass { NonPositive, Flat, Other };

/// User-supplied data for the constant-potential rigidity checks on a
/// general ambient manifold. The caller is responsible for the potential
/// actually being constant on each hypersurface of the family.
struct GeneralRigidityData {
  double mu1 = 0.0;           // first nonzero slice Laplacian eigenvalue
  double Q = 0.0;             // constant Jacobi potential
  double sff_norm_sq = 0.0;   // |II|^2
  double normal_ricci = 0.0;  // Ric(n, n), normalized
  bool hypersurface_convex = false;
  RicciClass hypersurface_ricci = RicciClass::Other;
};

struct AnalyzeConfig {
  SamplingGrid grid;
  double crossing_tol = 1e-10;
  double degeneracy_tol = 1e-9;
  DivergenceConfig divergence;
};

/// Eigenvalue of the volume-constrained Jacobi operator:
/// (value - h(r)) / alpha^2(r). The zero fiber mode is excluded (constants
/// violate the volume constraint) and raises ZeroModeQueried.
double shifted_eigenvalue(const WarpedModel& model, const FiberSpectrum& spec,
                          double value, double r);

/// Samples (r, h, alpha^2, Morse index) on the grid. Samples where the
/// second variation is singular carry morse_index = -1.
std::vector<ScanSample> scan_profile(const WarpedModel& model,
                                     const FiberSpectrum& spec,
                                     const SamplingGrid& grid,
                                     double degeneracy_tol);

/// Number of negative shifted eigenvalues at r, counted with multiplicity:
/// sum of multiplicities over distinct 0 < mu < h(r). Raises
/// DegeneratePoint when some mu lies within
/// degeneracy_tol * max(1, |h(r)|) of h(r).
std::int64_t morse_index(const WarpedModel& model, const FiberSpectrum& spec,
                         double r, double degeneracy_tol);

/// Locates every sign change of h - mu on the sampled grid for every
/// distinct eigenvalue mu reachable on the interval, refining each bracket
/// by bisection to width <= tol. Tangential contacts are reported
/// separately as touches.
CrossingScan find_crossings(const WarpedModel& model, const FiberSpectrum& spec,
                            Interval interval, int grid_points, double tol);

struct WitnessResult {
  double eigenvalue = 0.0;
  std::int64_t index_a = 0;
  std::int64_t index_b = 0;
};

/// Index-change witness between two radii: checks that the second
/// variation is nonsingular at r_a and r_b (else DegenerateEndpoint) and
/// returns the smallest distinct eigenvalue strictly between h(r_a) and
/// h(r_b) together with the two Morse indices; empty when the indices
/// coincide.
std::optional<WitnessResult> theorem2_witness(const WarpedModel& model,
                                              const FiberSpectrum& spec,
                                              double r_a, double r_b,
                                              double degeneracy_tol);

/// Sampled certificate for the no-bifurcation criterion
/// alpha_dot^2 - alpha_ddot alpha < mu_1 / (n-1).
RigidityCertificate certify_no_bifurcation(const WarpedModel& model,
                                           const FiberSpectrum& spec,
                                           const SamplingGrid& grid,
                                           double degeneracy_tol);

/// Sampled certificate for the scalar-curvature criterion
/// alpha^2 (R(r,x) + n/(n-1) H^2) < 2 mu_1 + R(x), evaluated with the
/// unfavorable fiber curvature bound on each side. fiber_scalar_max
/// overrides the model's stored upper bound when supplied.
RigidityCertificate certify_corsc(const WarpedModel& model,
                                  const FiberSpectrum& spec,
                                  std::optional<double> fiber_scalar_max,
                                  const SamplingGrid& grid,
                                  double degeneracy_tol);

/// Heuristic classifier for the growth of alpha_dot^2 - alpha_ddot alpha
/// toward one end of the domain, from finitely many geometric samples.
DivergenceClass divergence_test(const WarpedModel& model, DomainEnd end,
                                const DivergenceConfig& config);

/// Constant-potential rigidity checks on user-supplied data, evaluated in
/// order: mu1 - Q > 0; convex with non-positive Ricci; Ric <= -|II|^2/(n-1)
/// (checked as Q <= 0 through the potential identity); Ricci-flat with
/// mu1 >= |II|^2. Returns the first satisfied criterion as Certified.
RigidityCertificate check_general_rigidity(const GeneralRigidityData& data);

/// Full pipeline: scan profile, crossing detection, both warped
/// certificates, divergence at both ends; per-step failures are recorded
/// in the report instead of aborting the remaining steps.
BifurcationReport analyze(const WarpedModel& model, const FiberSpectrum& spec,
                          const AnalyzeConfig& config);

const char* to_string(CrossingDirection d);
const char* to_string(RigidityCriterion c);
const char* to_string(RigidityVerdict v);
const char* to_string(DivergenceClass c);
const char* to_string(SummaryVerdict v);

}  // namespace cmcb
