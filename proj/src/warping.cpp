#include "cmcb/warping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace cmcb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double scale_of(double x) { return std::max(1.0, std::abs(x)); }

void require(bool ok, ErrorCode code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

std::string describe(double r) {
  std::ostringstream os;
  os.precision(17);
  os << r;
  return os.str();
}

}  // namespace

bool Interval::bounded() const {
  return std::isfinite(lo) && std::isfinite(hi);
}

WarpingFunction::WarpingFunction(Form form, ScalarFn f0, ScalarFn f1,
                                 ScalarFn f2, Interval domain)
    : form_(form),
      f0_(std::move(f0)),
      f1_(std::move(f1)),
      f2_(std::move(f2)),
      domain_(domain) {}

WarpingFunction WarpingFunction::geodesic(ScalarFn alpha, ScalarFn dalpha,
                                          ScalarFn ddalpha, Interval domain) {
  require(!(domain.lo != domain.lo) && !(domain.hi != domain.hi),
          ErrorCode::DomainError, "domain endpoints must not be NaN");
  require(domain.lo < domain.hi, ErrorCode::DomainError,
          "empty warping domain");
  require(static_cast<bool>(alpha) && static_cast<bool>(dalpha) &&
              static_cast<bool>(ddalpha),
          ErrorCode::InvalidParams, "missing geodesic evaluator");
  return WarpingFunction(Form::Geodesic, std::move(alpha), std::move(dalpha),
                         std::move(ddalpha), domain);
}

WarpingFunction WarpingFunction::graph(ScalarFn psi_sq, ScalarFn dpsi_sq,
                                       Interval domain) {
  require(!(domain.lo != domain.lo) && !(domain.hi != domain.hi),
          ErrorCode::DomainError, "domain endpoints must not be NaN");
  require(domain.lo < domain.hi, ErrorCode::DomainError,
          "empty warping domain");
  require(!(domain.lo < 0.0 && domain.hi > 0.0), ErrorCode::DomainError,
          "graph form identifies alpha with |r|; 0 must not lie strictly "
          "inside the domain");
  require(static_cast<bool>(psi_sq) && static_cast<bool>(dpsi_sq),
          ErrorCode::InvalidParams, "missing graph evaluator");
  return WarpingFunction(Form::Graph, std::move(psi_sq), std::move(dpsi_sq),
                         ScalarFn{}, domain);
}

double WarpingFunction::alpha(double r) const {
  require(form_ == Form::Geodesic, ErrorCode::DomainError,
          "alpha() requires a geodesic-form warping");
  return f0_(r);
}

double WarpingFunction::dalpha(double r) const {
  require(form_ == Form::Geodesic, ErrorCode::DomainError,
          "dalpha() requires a geodesic-form warping");
  return f1_(r);
}

double WarpingFunction::ddalpha(double r) const {
  require(form_ == Form::Geodesic, ErrorCode::DomainError,
          "ddalpha() requires a geodesic-form warping");
  return f2_(r);
}

double WarpingFunction::psi_sq(double r) const {
  require(form_ == Form::Graph, ErrorCode::DomainError,
          "psi_sq() requires a graph-form warping");
  return f0_(r);
}

double WarpingFunction::dpsi_sq(double r) const {
  require(form_ == Form::Graph, ErrorCode::DomainError,
          "dpsi_sq() requires a graph-form warping");
  return f1_(r);
}

namespace {

/// Finite window inside the (possibly unbounded) domain used for sampled
/// validation.
std::pair<double, double> validation_window(const Interval& dom, double eps) {
  constexpr double kSpan = 10.0;
  double lo = dom.lo, hi = dom.hi;
  if (std::isfinite(lo) && std::isfinite(hi)) return {lo + eps, hi - eps};
  if (std::isfinite(lo)) return {lo + eps, lo + eps + 2.0 * kSpan};
  if (std::isfinite(hi)) return {hi - eps - 2.0 * kSpan, hi - eps};
  return {-kSpan, kSpan};
}

double default_epsilon(const Interval& dom) {
  constexpr double kRel = 1e-6;
  constexpr double kFloor = 1e-12;
  if (dom.bounded()) return std::max(kRel * dom.length(), kFloor);
  if (std::isfinite(dom.lo)) return std::max(kRel * scale_of(dom.lo), kFloor);
  if (std::isfinite(dom.hi)) return std::max(kRel * scale_of(dom.hi), kFloor);
  return 0.0;
}

}  // namespace

double derivative_validation_error(const WarpingFunction& warp, int points,
                                   unsigned seed) {
  const Interval dom = warp.domain();
  auto [wlo, whi] = validation_window(dom, default_epsilon(dom));
  if (!(wlo < whi)) fail(ErrorCode::DomainError, "domain too small to sample");

  const double xscale = std::max(scale_of(wlo), scale_of(whi));
  double h1 = std::cbrt(kEps) * xscale;
  double h2 = std::pow(kEps, 0.25) * xscale;
  h1 = std::min(h1, (whi - wlo) / 16.0);
  h2 = std::min(h2, (whi - wlo) / 16.0);
  const double pad = 2.0 * std::max(h1, h2);

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> pick(wlo + pad, whi - pad);

  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double r = pick(rng);
    if (warp.form() == WarpingFunction::Form::Graph) {
      const double fd = (warp.psi_sq(r + h1) - warp.psi_sq(r - h1)) / (2.0 * h1);
      const double sup = warp.dpsi_sq(r);
      worst = std::max(worst, std::abs(fd - sup) / scale_of(sup));
    } else {
      const double fd1 = (warp.alpha(r + h1) - warp.alpha(r - h1)) / (2.0 * h1);
      const double d1 = warp.dalpha(r);
      worst = std::max(worst, std::abs(fd1 - d1) / scale_of(d1));
      const double fd2 =
          (warp.alpha(r + h2) - 2.0 * warp.alpha(r) + warp.alpha(r - h2)) /
          (h2 * h2);
      const double d2 = warp.ddalpha(r);
      worst = std::max(worst, std::abs(fd2 - d2) / scale_of(d2));
    }
  }
  return worst;
}

WarpedModel::WarpedModel(int dim, WarpingFunction warping,
                         std::string model_label,
                         std::optional<std::pair<double, double>> fiber_scalar,
                         double endpoint_clearance)
    : n(dim),
      warp(std::move(warping)),
      fiber_scalar_curvature(fiber_scalar),
      label(std::move(model_label)),
      epsilon(endpoint_clearance) {
  require(n >= 2, ErrorCode::InvalidDimension,
          "ambient dimension must be at least 2");
  if (fiber_scalar_curvature) {
    require(fiber_scalar_curvature->first <= fiber_scalar_curvature->second,
            ErrorCode::InvalidParams, "fiber scalar curvature min > max");
  }
  if (!(epsilon >= 0.0)) epsilon = default_epsilon(warp.domain());
  require(usable().lo < usable().hi, ErrorCode::DomainError,
          "domain empty after endpoint clearance");

  const double mismatch = derivative_validation_error(warp);
  if (mismatch > 1e-6) {
    std::ostringstream os;
    os << "supplied derivatives disagree with finite differences "
          "(max relative deviation "
       << mismatch << ")";
    fail(ErrorCode::DerivativeMismatch, os.str());
  }
}

Interval WarpedModel::usable() const {
  Interval d = warp.domain();
  if (std::isfinite(d.lo)) d.lo += epsilon;
  if (std::isfinite(d.hi)) d.hi -= epsilon;
  return d;
}

namespace {

void require_interior(const WarpedModel& model, double r) {
  if (!model.interior(r)) {
    fail(ErrorCode::DomainError,
         "r = " + describe(r) + " outside the usable domain (" +
             describe(model.usable().lo) + ", " + describe(model.usable().hi) +
             ")");
  }
}

}  // namespace

StabilityJet stability_jet(const WarpedModel& model, double r) {
  require_interior(model, r);
  StabilityJet jet;
  if (model.warp.form() == WarpingFunction::Form::Graph) {
    const double p = model.warp.psi_sq(r);
    if (!(p > 0.0))
      fail(ErrorCode::NonPositiveWarp, "psi^2 <= 0 at r = " + describe(r));
    jet.alpha_sq = r * r;
    if (!(jet.alpha_sq > 0.0))
      fail(ErrorCode::NonPositiveWarp, "alpha^2 <= 0 at r = " + describe(r));
    jet.alpha_dot_sq = p;
    // chain rule through ds = -psi^-1 dr:  alpha_ddot * alpha = (r/2)(psi^2)'
    jet.alpha_ddot_alpha = 0.5 * r * model.warp.dpsi_sq(r);
  } else {
    const double a = model.warp.alpha(r);
    if (!(a > 0.0))
      fail(ErrorCode::NonPositiveWarp, "alpha <= 0 at r = " + describe(r));
    const double da = model.warp.dalpha(r);
    jet.alpha_sq = a * a;
    jet.alpha_dot_sq = da * da;
    jet.alpha_ddot_alpha = model.warp.ddalpha(r) * a;
  }
  return jet;
}

double stability_h(const WarpedModel& model, double r) {
  const StabilityJet jet = stability_jet(model, r);
  return (model.n - 1) * (jet.alpha_dot_sq - jet.alpha_ddot_alpha);
}

GeometricInvariants geometric_invariants(const WarpedModel& model, double r) {
  const StabilityJet jet = stability_jet(model, r);
  const double m = model.n - 1;
  GeometricInvariants inv;
  if (model.warp.form() == WarpingFunction::Form::Graph) {
    inv.H = m * std::sqrt(jet.alpha_dot_sq) / std::sqrt(jet.alpha_sq);
  } else {
    inv.H = -m * model.warp.dalpha(r) / model.warp.alpha(r);
  }
  inv.lagrange_multiplier = m * inv.H;
  inv.sff_norm_sq = m * jet.alpha_dot_sq / jet.alpha_sq;
  inv.normal_ricci = -jet.alpha_ddot_alpha / jet.alpha_sq;
  inv.Q = m * (jet.alpha_dot_sq - jet.alpha_ddot_alpha) / jet.alpha_sq;
  return inv;
}

double scalar_curvature(const WarpedModel& model, double r,
                        double fiber_scalar) {
  const StabilityJet jet = stability_jet(model, r);
  const double m = model.n - 1;
  return (fiber_scalar -
          m * ((model.n - 2) * jet.alpha_dot_sq + 2.0 * jet.alpha_ddot_alpha)) /
         jet.alpha_sq;
}

namespace {

struct AdaptiveSimpson {
  const WarpedModel& model;
  long long evals = 0;
  static constexpr long long kBudget = 1'000'000;
  static constexpr int kMaxDepth = 52;

  double eval(double u) {
    if (++evals > kBudget)
      fail(ErrorCode::QuadratureFailure, "evaluation budget exhausted");
    const double p = model.warp.psi_sq(u);
    if (!(p > 0.0))
      fail(ErrorCode::NonPositiveWarp, "psi^2 <= 0 at u = " + describe(u));
    return 1.0 / std::sqrt(p);
  }

  static double rule(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double refine(double a, double fa, double m, double fm, double b, double fb,
                double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = eval(lm), frm = eval(rm);
    const double left = rule(a, fa, flm, m, fm);
    const double right = rule(m, fm, frm, b, fb);
    const double err = (left + right - whole) / 15.0;
    if (std::abs(err) <= tol) return left + right + err;
    if (depth >= kMaxDepth)
      fail(ErrorCode::QuadratureFailure,
           "tolerance unreachable at subdivision limit");
    return refine(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
           refine(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
  }

  double integrate(double a, double b, double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = eval(a), fm = eval(m), fb = eval(b);
    return refine(a, fa, m, fm, b, fb, rule(a, fa, fm, b, fb), tol, 0);
  }
};

}  // namespace

double geodesic_coordinate(const WarpedModel& model, double r_ref, double r,
                           double tol) {
  if (model.warp.form() != WarpingFunction::Form::Graph)
    fail(ErrorCode::DomainError,
         "geodesic_coordinate requires a graph-form model");
  if (!(tol > 0.0)) fail(ErrorCode::InvalidParams, "tol must be positive");
  require_interior(model, r_ref);
  require_interior(model, r);
  if (r == r_ref) return 0.0;
  AdaptiveSimpson quad{model};
  return -quad.integrate(r_ref, r, tol);
}

}  // namespace cmcb
