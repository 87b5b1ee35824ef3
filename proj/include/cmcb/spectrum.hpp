#pragma once

#include <cstdint>
#include <vector>

#include "cmcb/error.hpp"

namespace cmcb {

/// One distinct Laplace eigenvalue with its multiplicity.
struct SpectralLine {
  double value = 0.0;
  std::int64_t multiplicity = 0;
};

/// Generators of the dual lattice Gamma* of a flat torus R^d / Gamma,
/// stored row-major (rows are the generators, units 1/length).
struct DualLatticeBasis {
  int dim = 0;
  std::vector<double> rows;  // dim * dim entries

  double at(int i, int j) const { return rows[static_cast<size_t>(i) * dim + j]; }
};

/// Laplace-Beltrami spectrum of the fiber (P, g^P): sorted distinct
/// eigenvalues 0 = mu_0 < mu_1 <= ... with multiplicities, extendable to
/// any requested bound. Sphere and torus spectra regenerate on demand;
/// explicit spectra are capped by the supplied data.
class FiberSpectrum {
 public:
  enum class Source { Sphere, Torus, Explicit };

  Source source() const { return source_; }

  /// Entries materialized at construction (every value <= the
  /// construction bound).
  const std::vector<SpectralLine>& entries() const { return entries_; }

  /// Complete list of distinct eigenvalues <= bound. Explicit spectra
  /// raise BoundExceedsData when the bound exceeds the supplied data.
  std::vector<SpectralLine> enumerate_up_to(double bound) const;

  /// First nonzero eigenvalue mu_1.
  double first_nonzero() const;

  friend FiberSpectrum sphere_spectrum(int m, double bound);
  friend FiberSpectrum torus_spectrum(const DualLatticeBasis& dual,
                                      double bound);
  friend FiberSpectrum explicit_spectrum(std::vector<SpectralLine> lines);

 private:
  FiberSpectrum() = default;

  Source source_ = Source::Explicit;
  int sphere_dim_ = 0;
  DualLatticeBasis dual_;
  std::vector<SpectralLine> entries_;
};

/// Spectrum of the unit round sphere S^m: values i(i+m-1) with the
/// standard harmonic multiplicities, all entries <= bound.
FiberSpectrum sphere_spectrum(int m, double bound);

/// Spectrum of the flat torus with dual lattice Gamma*: values
/// 4 pi^2 |y|^2 over y in Gamma*, grouped into distinct entries with
/// multiplicities, all entries <= bound.
FiberSpectrum torus_spectrum(const DualLatticeBasis& dual, double bound);

/// Wraps a user-supplied list of distinct (value, multiplicity) pairs.
FiberSpectrum explicit_spectrum(std::vector<SpectralLine> lines);

/// Numerical oracle for the S^2 spectrum: discretizes
/// -(1/sin t) d/dt (sin t d/dt) + m^2/sin^2 t on (0, pi) for every
/// azimuthal mode m in [0, max_mode] with a symmetric second-order
/// finite-difference scheme on n_grid interior points, extracts all
/// eigenvalues of each tridiagonal matrix by Sturm-sequence bisection,
/// and returns the merged sorted list (modes m > 0 counted twice).
std::vector<double> legendre_fd_oracle(int n_grid, int max_mode);

}  // namespace cmcb
