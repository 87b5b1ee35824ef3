#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmcb/error.hpp"

namespace cmcb {

/// Open interval of the radial coordinate. Endpoints may be infinite.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double r) const { return r > lo && r < hi; }
  double length() const { return hi - lo; }
  bool bounded() const;
};

using ScalarFn = std::function<double(double)>;

/// Warping profile of a warped product (r1,r2) x P with metric
/// dr^2 + alpha^2(r) g^P.
///
/// Two representations are supported:
///  - Geodesic: alpha(r) and its first two derivatives, alpha > 0 inside
///    the domain.
///  - Graph: the metric psi(r)^-2 dr^2 + r^2 g^P given through
///    psi_sq = psi^2 and its derivative; alpha is identified with |r|,
///    so 0 must not lie strictly inside the domain.
class WarpingFunction {
 public:
  enum class Form { Geodesic, Graph };

  static WarpingFunction geodesic(ScalarFn alpha, ScalarFn dalpha,
                                  ScalarFn ddalpha, Interval domain);
  static WarpingFunction graph(ScalarFn psi_sq, ScalarFn dpsi_sq,
                               Interval domain);

  Form form() const { return form_; }
  const Interval& domain() const { return domain_; }

  /// Geodesic accessors (DomainError when called on a graph form).
  double alpha(double r) const;
  double dalpha(double r) const;
  double ddalpha(double r) const;

  /// Graph accessors (DomainError when called on a geodesic form).
  double psi_sq(double r) const;
  double dpsi_sq(double r) const;

 private:
  WarpingFunction(Form form, ScalarFn f0, ScalarFn f1, ScalarFn f2,
                  Interval domain);

  Form form_;
  ScalarFn f0_;  // alpha or psi_sq
  ScalarFn f1_;  // dalpha or dpsi_sq
  ScalarFn f2_;  // ddalpha (geodesic only)
  Interval domain_;
};

/// The three sign-stable combinations every pointwise formula consumes:
/// (alpha^2, alpha_dot^2, alpha_ddot * alpha), derivatives taken in the
/// geodesic coordinate. For a graph-form warping these equal
/// (r^2, psi^2(r), (r/2)(psi^2)'(r)).
struct StabilityJet {
  double alpha_sq = 0.0;
  double alpha_dot_sq = 0.0;
  double alpha_ddot_alpha = 0.0;
};

/// Warped model: ambient dimension n, warping profile, optional range of
/// the fiber scalar curvature (min, max over P).
///
/// Construction validates the supplied derivative evaluators against
/// centered finite differences at 64 deterministic interior samples
/// (relative tolerance 1e-6) and computes the endpoint clearance used by
/// every pointwise operation.
struct WarpedModel {
  WarpedModel(int dim, WarpingFunction warping, std::string model_label = {},
              std::optional<std::pair<double, double>> fiber_scalar = {},
              double endpoint_clearance = -1.0);

  int n;
  WarpingFunction warp;
  std::optional<std::pair<double, double>> fiber_scalar_curvature;
  std::string label;
  /// Evaluation is restricted to [lo + epsilon, hi - epsilon] at finite
  /// endpoints (warp profiles may be singular on the boundary).
  double epsilon;
  std::vector<std::string> warnings;

  /// Epsilon-clamped evaluation interval.
  Interval usable() const;
  bool interior(double r) const { return usable().contains(r); }
};

/// Pointwise extrinsic/intrinsic data of the slice {r} x P.
struct GeometricInvariants {
  double H = 0.0;                    // mean curvature, inward normal
  double lagrange_multiplier = 0.0;  // (n-1) H
  double sff_norm_sq = 0.0;          // |II|^2
  double normal_ricci = 0.0;         // Ric(dr, dr), normalized
  double Q = 0.0;                    // Jacobi potential
};

/// Maximum relative deviation between the supplied derivative evaluators
/// and centered finite differences of the value evaluator, over `points`
/// deterministic pseudo-random interior samples.
double derivative_validation_error(const WarpingFunction& warp,
                                   int points = 64, unsigned seed = 0x7a3c9u);

StabilityJet stability_jet(const WarpedModel& model, double r);

/// Stability function h(r) = (n-1)(alpha_dot^2 - alpha_ddot * alpha).
/// Its crossings with fiber Laplace eigenvalues locate bifurcation radii.
double stability_h(const WarpedModel& model, double r);

GeometricInvariants geometric_invariants(const WarpedModel& model, double r);

/// Ambient scalar curvature at (r, x) given the fiber scalar curvature
/// R(x):  (R(x) - (n-1)((n-2) alpha_dot^2 + 2 alpha_ddot alpha)) / alpha^2.
double scalar_curvature(const WarpedModel& model, double r, double fiber_scalar);

/// Geodesic coordinate s(r) = -Int_{r_ref}^{r} psi(u)^-1 du of a
/// graph-form model, by adaptive quadrature with absolute error <= tol.
/// s(r_ref) = 0 and s is strictly decreasing in r.
double geodesic_coordinate(const WarpedModel& model, double r_ref, double r,
                           double tol);

}  // namespace cmcb
