#pragma once

#include <optional>
#include <string>

#include "cmcb/spectrum.hpp"
#include "cmcb/warping.hpp"

namespace cmcb {

/// Parameters of the Schwarzschild-type graph metric
/// psi^-2 dr^2 + r^2 g^{S^2},  psi^2(r) = 1 - 2K/r + E r^2,  n = 3.
/// K is the mass parameter (rejected unless positive), E the cosmological
/// constant parameter: E = 0 classical, E > 0 anti-de Sitter, E < 0
/// de Sitter.
struct SchwarzschildParams {
  double K = 1.0;
  double E = 0.0;
};

/// A model together with the fiber spectrum it is meant to be analyzed
/// against.
struct ModelBundle {
  WarpedModel model;
  FiberSpectrum fiber;
};

/// Builds the Schwarzschild family member for (K, E) on its maximal
/// domain: (r_hat, infinity) for E >= 0 and (r_hat, 0) for E < 0, where
/// r_hat is the horizon root of psi^2 located by bracketing bisection to
/// relative tolerance 1e-14. The fiber is the unit round S^2.
ModelBundle schwarzschild_model(const SchwarzschildParams& params);

/// Horizon radius of the (K, E) family (exposed for reporting and tests).
double schwarzschild_horizon(const SchwarzschildParams& params);

/// Parameters for the named catalog families.
struct CatalogParams {
  int n = 3;
  Interval domain{0.0, 1.0};
  double C = 1.0;  // power_law amplitude
  double k = 2.0;  // power_law exponent
  std::optional<DualLatticeBasis> lattice;  // desitter_cusp
};

/// Named catalog: "pseudo_hyperbolic" (alpha = e^r, sphere fiber),
/// "hyperbolic_sinh" (alpha = sinh r, sphere fiber), "desitter_cusp"
/// (alpha = e^r, flat torus fiber), "power_law" (alpha = C r^k, sphere
/// fiber, requires k > 1 and C != 0).
ModelBundle catalog_model(const std::string& name, const CatalogParams& params);

}  // namespace cmcb
