#include "cmcb/models.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace cmcb {

namespace {

std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double psi_sq_value(double K, double E, double r) {
  return 1.0 - 2.0 * K / r + E * r * r;
}

double bisect_root(double K, double E, double a, double b) {
  // invariant: psi^2(a) < 0 < psi^2(b) or the mirrored arrangement
  double fa = psi_sq_value(K, E, a);
  while (std::abs(b - a) > 1e-14 * std::max(std::abs(a), std::abs(b))) {
    const double mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;
    const double fm = psi_sq_value(K, E, mid);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double schwarzschild_horizon(const SchwarzschildParams& p) {
  if (!(p.K > 0.0))
    fail(ErrorCode::InvalidMass, "mass parameter K must be positive");
  if (p.E != p.E)
    fail(ErrorCode::InvalidParams, "cosmological parameter E must not be NaN");

  if (p.E >= 0.0) {
    // psi^2 is strictly increasing on r > 0: negative near 0, positive
    // for large r.
    double lo = p.K * 1e-9;
    double hi = std::max(4.0 * p.K, 1.0);
    int expansions = 0;
    while (!(psi_sq_value(p.K, p.E, hi) > 0.0)) {
      hi *= 2.0;
      if (++expansions > 200)
        fail(ErrorCode::RootNotFound, "horizon bracket expansion failed");
    }
    if (!(psi_sq_value(p.K, p.E, lo) < 0.0))
      fail(ErrorCode::RootNotFound, "horizon bracket lost the sign change");
    return bisect_root(p.K, p.E, lo, hi);
  }

  // E < 0: psi^2 is strictly increasing on r < 0, positive near 0^- and
  // negative for large |r|.
  double hi = -1e-12 * std::max(1.0, p.K);
  double lo = -std::max(1.0, std::sqrt(1.0 / -p.E));
  int expansions = 0;
  while (!(psi_sq_value(p.K, p.E, lo) < 0.0)) {
    lo *= 2.0;
    if (++expansions > 200)
      fail(ErrorCode::RootNotFound, "horizon bracket expansion failed");
  }
  if (!(psi_sq_value(p.K, p.E, hi) > 0.0))
    fail(ErrorCode::RootNotFound, "horizon bracket lost the sign change");
  return bisect_root(p.K, p.E, lo, hi);
}

ModelBundle schwarzschild_model(const SchwarzschildParams& p) {
  const double r_hat = schwarzschild_horizon(p);
  const double K = p.K, E = p.E;

  Interval domain;
  if (E >= 0.0)
    domain = {r_hat, std::numeric_limits<double>::infinity()};
  else
    domain = {r_hat, 0.0};

  WarpingFunction warp = WarpingFunction::graph(
      [K, E](double r) { return psi_sq_value(K, E, r); },
      [K, E](double r) { return 2.0 * K / (r * r) + 2.0 * E * r; }, domain);

  WarpedModel model(3, std::move(warp),
                    "schwarzschild K=" + num(K) + " E=" + num(E),
                    std::pair<double, double>{2.0, 2.0});
  if (E < 0.0) {
    model.warnings.push_back(
        "de Sitter branch: the maximal interval (" + num(r_hat) +
        ", 0) uses a negative radial coordinate; slice radius is |r|");
  }
  return ModelBundle{std::move(model), sphere_spectrum(2, 100.0)};
}

ModelBundle catalog_model(const std::string& name, const CatalogParams& p) {
  if (p.n < 3)
    fail(ErrorCode::InvalidDimension,
         "catalog models need ambient dimension n >= 3");
  if (!(p.domain.lo < p.domain.hi))
    fail(ErrorCode::InvalidParams, "empty catalog domain");

  const int fiber_dim = p.n - 1;
  const double sphere_scalar =
      static_cast<double>(fiber_dim) * (fiber_dim - 1);

  if (name == "pseudo_hyperbolic") {
    WarpingFunction warp = WarpingFunction::geodesic(
        [](double r) { return std::exp(r); },
        [](double r) { return std::exp(r); },
        [](double r) { return std::exp(r); }, p.domain);
    WarpedModel model(p.n, std::move(warp),
                      "pseudo_hyperbolic n=" + num(p.n),
                      std::pair<double, double>{sphere_scalar, sphere_scalar});
    return ModelBundle{std::move(model), sphere_spectrum(fiber_dim, 100.0)};
  }

  if (name == "hyperbolic_sinh") {
    if (p.domain.lo < 0.0)
      fail(ErrorCode::InvalidParams,
           "sinh warping requires a domain inside (0, infinity)");
    WarpingFunction warp = WarpingFunction::geodesic(
        [](double r) { return std::sinh(r); },
        [](double r) { return std::cosh(r); },
        [](double r) { return std::sinh(r); }, p.domain);
    WarpedModel model(p.n, std::move(warp), "hyperbolic_sinh n=" + num(p.n),
                      std::pair<double, double>{sphere_scalar, sphere_scalar});
    return ModelBundle{std::move(model), sphere_spectrum(fiber_dim, 100.0)};
  }

  if (name == "desitter_cusp") {
    if (!p.lattice)
      fail(ErrorCode::InvalidParams,
           "desitter_cusp requires a dual lattice basis");
    if (p.lattice->dim != fiber_dim)
      fail(ErrorCode::InvalidParams,
           "dual lattice dimension must equal n - 1");
    WarpingFunction warp = WarpingFunction::geodesic(
        [](double r) { return std::exp(r); },
        [](double r) { return std::exp(r); },
        [](double r) { return std::exp(r); }, p.domain);
    WarpedModel model(p.n, std::move(warp), "desitter_cusp n=" + num(p.n),
                      std::pair<double, double>{0.0, 0.0});
    return ModelBundle{std::move(model), torus_spectrum(*p.lattice, 1000.0)};
  }

  if (name == "power_law") {
    if (!(p.k > 1.0) || p.C == 0.0)
      fail(ErrorCode::InvalidParams,
           "power_law requires exponent k > 1 and amplitude C != 0");
    if (p.domain.lo < 0.0)
      fail(ErrorCode::InvalidParams,
           "power_law warping requires a domain inside (0, infinity)");
    if (p.C < 0.0)
      fail(ErrorCode::NonPositiveWarp,
           "power_law warping must be positive: C > 0 on a positive domain");
    const double C = p.C, k = p.k;
    WarpingFunction warp = WarpingFunction::geodesic(
        [C, k](double r) { return C * std::pow(r, k); },
        [C, k](double r) { return C * k * std::pow(r, k - 1.0); },
        [C, k](double r) { return C * k * (k - 1.0) * std::pow(r, k - 2.0); },
        p.domain);
    WarpedModel model(p.n, std::move(warp),
                      "power_law C=" + num(C) + " k=" + num(k) +
                          " n=" + num(p.n),
                      std::pair<double, double>{sphere_scalar, sphere_scalar});
    return ModelBundle{std::move(model), sphere_spectrum(fiber_dim, 100.0)};
  }

  fail(ErrorCode::UnknownModel, "unknown catalog model '" + name + "'");
}

}  // namespace cmcb
