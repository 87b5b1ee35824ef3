#include "cmcb/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

namespace cmcb {

namespace {

constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;
constexpr double kTieRel = 1e-9;

std::int64_t sphere_multiplicity(std::int64_t i, int m) {
  if (i == 0) return 1;
  if (m == 1) return 2;
  unsigned __int128 binom = 1;  // C(i + m - 2, m - 2), exact stepwise
  for (int j = 1; j <= m - 2; ++j)
    binom = binom * static_cast<unsigned __int128>(i + j) /
            static_cast<unsigned __int128>(j);
  unsigned __int128 num =
      binom * static_cast<unsigned __int128>(2 * i + m - 1);
  num /= static_cast<unsigned __int128>(m - 1);
  if (num > static_cast<unsigned __int128>(
                std::numeric_limits<std::int64_t>::max()))
    fail(ErrorCode::InvalidParams, "sphere multiplicity overflows int64");
  return static_cast<std::int64_t>(num);
}

std::vector<SpectralLine> sphere_lines(int m, double bound) {
  std::vector<SpectralLine> lines;
  for (std::int64_t i = 0;; ++i) {
    const double value = static_cast<double>(i) * static_cast<double>(i + m - 1);
    if (value > bound) break;
    lines.push_back({value, sphere_multiplicity(i, m)});
  }
  return lines;
}

struct GramData {
  int dim;
  std::vector<double> g;     // dim x dim Gram matrix of the basis rows
  std::vector<double> ginv;  // its inverse
  bool integral;             // all basis entries integers
  std::vector<std::int64_t> gi;  // exact integer Gram when integral
};

double basis_determinant(const DualLatticeBasis& b) {
  const int d = b.dim;
  std::vector<double> a = b.rows;
  double det = 1.0;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(a[r * d + col]) > std::abs(a[piv * d + col])) piv = r;
    if (piv != col) {
      for (int c = 0; c < d; ++c) std::swap(a[col * d + c], a[piv * d + c]);
      det = -det;
    }
    const double p = a[col * d + col];
    det *= p;
    if (p == 0.0) return 0.0;
    for (int r = col + 1; r < d; ++r) {
      const double f = a[r * d + col] / p;
      for (int c = col; c < d; ++c) a[r * d + c] -= f * a[col * d + c];
    }
  }
  return det;
}

GramData build_gram(const DualLatticeBasis& b) {
  const int d = b.dim;
  if (d < 1 || b.rows.size() != static_cast<size_t>(d) * d)
    fail(ErrorCode::InvalidParams, "dual lattice basis shape mismatch");

  double row_norm_product = 1.0;
  for (int i = 0; i < d; ++i) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += b.at(i, j) * b.at(i, j);
    row_norm_product *= std::max(std::sqrt(s), 1e-30);
  }
  const double det = basis_determinant(b);
  if (!(std::abs(det) > 1e-12 * row_norm_product))
    fail(ErrorCode::SingularBasis, "dual lattice basis is singular");

  GramData gd;
  gd.dim = d;
  gd.g.assign(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += b.at(i, k) * b.at(j, k);
      gd.g[static_cast<size_t>(i) * d + j] = s;
    }

  // Gauss-Jordan inverse of the Gram matrix.
  std::vector<double> a = gd.g;
  gd.ginv.assign(static_cast<size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) gd.ginv[static_cast<size_t>(i) * d + i] = 1.0;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::abs(a[r * d + col]) > std::abs(a[piv * d + col])) piv = r;
    if (a[piv * d + col] == 0.0)
      fail(ErrorCode::SingularBasis, "Gram matrix not invertible");
    for (int c = 0; c < d; ++c) {
      std::swap(a[col * d + c], a[piv * d + c]);
      std::swap(gd.ginv[col * d + c], gd.ginv[piv * d + c]);
    }
    const double p = a[col * d + col];
    for (int c = 0; c < d; ++c) {
      a[col * d + c] /= p;
      gd.ginv[col * d + c] /= p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = a[r * d + col];
      if (f == 0.0) continue;
      for (int c = 0; c < d; ++c) {
        a[r * d + c] -= f * a[col * d + c];
        gd.ginv[r * d + c] -= f * gd.ginv[col * d + c];
      }
    }
  }

  gd.integral = true;
  for (double v : b.rows) {
    if (!(std::abs(v) < (1ll << 26)) || v != std::nearbyint(v)) {
      gd.integral = false;
      break;
    }
  }
  if (gd.integral) {
    gd.gi.assign(static_cast<size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < d; ++k)
          s += static_cast<std::int64_t>(std::llround(b.at(i, k))) *
               static_cast<std::int64_t>(std::llround(b.at(j, k)));
        gd.gi[static_cast<size_t>(i) * d + j] = s;
      }
  }
  return gd;
}

/// Enumerates all dual lattice coefficient vectors c with
/// 4 pi^2 c^T G c <= bound. The per-coordinate box |c_j|^2 <= t (G^-1)_jj
/// is complete (Cauchy-Schwarz in the G inner product).
std::vector<SpectralLine> torus_lines(const GramData& gd, double bound) {
  std::vector<SpectralLine> lines;
  if (bound < 0.0) return lines;
  const int d = gd.dim;
  const double t = bound / kFourPiSq;

  std::vector<std::int64_t> box(d);
  for (int j = 0; j < d; ++j) {
    const double cap = t * std::max(gd.ginv[static_cast<size_t>(j) * d + j], 0.0);
    box[j] = static_cast<std::int64_t>(std::floor(std::sqrt(cap) + 1e-9)) + 1;
  }

  std::vector<std::int64_t> c(d, 0);
  std::vector<double> norms;
  std::vector<std::int64_t> inorms;

  auto recurse = [&](auto&& self, int j) -> void {
    if (j == d) {
      if (gd.integral) {
        std::int64_t q = 0;
        for (int a = 0; a < d; ++a)
          for (int b2 = 0; b2 < d; ++b2)
            q += c[a] * gd.gi[static_cast<size_t>(a) * d + b2] * c[b2];
        const double value = kFourPiSq * static_cast<double>(q);
        if (value <= bound) inorms.push_back(q);
      } else {
        double q = 0.0;
        for (int a = 0; a < d; ++a)
          for (int b2 = 0; b2 < d; ++b2)
            q += static_cast<double>(c[a]) *
                 gd.g[static_cast<size_t>(a) * d + b2] *
                 static_cast<double>(c[b2]);
        const double value = kFourPiSq * q;
        if (value <= bound) norms.push_back(q);
      }
      return;
    }
    for (std::int64_t v = -box[j]; v <= box[j]; ++v) {
      c[j] = v;
      self(self, j + 1);
    }
  };
  recurse(recurse, 0);

  if (gd.integral) {
    std::sort(inorms.begin(), inorms.end());
    for (size_t i = 0; i < inorms.size();) {
      size_t j = i;
      while (j < inorms.size() && inorms[j] == inorms[i]) ++j;
      lines.push_back({kFourPiSq * static_cast<double>(inorms[i]),
                       static_cast<std::int64_t>(j - i)});
      i = j;
    }
  } else {
    std::sort(norms.begin(), norms.end());
    for (size_t i = 0; i < norms.size();) {
      size_t j = i;
      while (j < norms.size() && norms[j] - norms[i] <= kTieRel * norms[i]) ++j;
      lines.push_back({kFourPiSq * norms[i], static_cast<std::int64_t>(j - i)});
      i = j;
    }
  }
  return lines;
}

void validate_explicit(const std::vector<SpectralLine>& lines) {
  if (lines.empty())
    fail(ErrorCode::MissingZeroMode, "empty spectrum");
  if (lines.front().value != 0.0 || lines.front().multiplicity != 1)
    fail(ErrorCode::MissingZeroMode,
         "spectrum must start with the simple zero mode (0, 1)");
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].multiplicity < 1)
      fail(ErrorCode::InvalidParams, "multiplicities must be >= 1");
    if (i > 0 && !(lines[i].value > lines[i - 1].value))
      fail(ErrorCode::NonMonotone, "values must be strictly increasing");
  }
}

}  // namespace

FiberSpectrum sphere_spectrum(int m, double bound) {
  if (m < 1) fail(ErrorCode::InvalidDimension, "sphere dimension must be >= 1");
  if (!(bound >= 0.0)) fail(ErrorCode::InvalidParams, "bound must be >= 0");
  FiberSpectrum s;
  s.source_ = FiberSpectrum::Source::Sphere;
  s.sphere_dim_ = m;
  s.entries_ = sphere_lines(m, bound);
  return s;
}

FiberSpectrum torus_spectrum(const DualLatticeBasis& dual, double bound) {
  if (!(bound >= 0.0)) fail(ErrorCode::InvalidParams, "bound must be >= 0");
  FiberSpectrum s;
  s.source_ = FiberSpectrum::Source::Torus;
  s.dual_ = dual;
  s.entries_ = torus_lines(build_gram(dual), bound);
  return s;
}

FiberSpectrum explicit_spectrum(std::vector<SpectralLine> lines) {
  validate_explicit(lines);
  FiberSpectrum s;
  s.source_ = FiberSpectrum::Source::Explicit;
  s.entries_ = std::move(lines);
  return s;
}

std::vector<SpectralLine> FiberSpectrum::enumerate_up_to(double bound) const {
  switch (source_) {
    case Source::Sphere:
      return sphere_lines(sphere_dim_, bound);
    case Source::Torus:
      return torus_lines(build_gram(dual_), bound);
    case Source::Explicit: {
      const double cap = entries_.back().value;
      if (bound > cap * (1.0 + kTieRel) + 1e-12) {
        std::ostringstream os;
        os << "explicit spectrum supplied up to " << cap
           << " but eigenvalues up to " << bound << " were requested";
        fail(ErrorCode::BoundExceedsData, os.str());
      }
      std::vector<SpectralLine> out;
      for (const auto& line : entries_)
        if (line.value <= bound) out.push_back(line);
      return out;
    }
  }
  return {};
}

double FiberSpectrum::first_nonzero() const {
  switch (source_) {
    case Source::Sphere:
      return static_cast<double>(sphere_dim_);
    case Source::Torus: {
      const GramData gd = build_gram(dual_);
      double min_diag = std::numeric_limits<double>::infinity();
      for (int j = 0; j < gd.dim; ++j)
        min_diag = std::min(min_diag, gd.g[static_cast<size_t>(j) * gd.dim + j]);
      const auto lines = torus_lines(gd, kFourPiSq * min_diag * (1.0 + 1e-12));
      for (const auto& line : lines)
        if (line.value > 0.0) return line.value;
      fail(ErrorCode::SingularBasis, "no nonzero dual lattice vector found");
    }
    case Source::Explicit:
      if (entries_.size() < 2)
        fail(ErrorCode::BoundExceedsData,
             "explicit spectrum has no nonzero eigenvalue");
      return entries_[1].value;
  }
  return 0.0;
}

namespace {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // size diag.size() - 1
};

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T pivot
/// count with the LAPACK-style pivot floor).
int count_below(const Tridiagonal& t, double x, double pivmin) {
  double q = t.diag[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  int count = q < 0.0 ? 1 : 0;
  const size_t n = t.diag.size();
  for (size_t i = 1; i < n; ++i) {
    q = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> all_eigenvalues(const Tridiagonal& t) {
  const size_t n = t.diag.size();
  double max_e2 = 1.0;
  for (double e : t.off) max_e2 = std::max(max_e2, e * e);
  const double pivmin = std::numeric_limits<double>::min() * max_e2;

  double glo = std::numeric_limits<double>::infinity();
  double ghi = -glo;
  for (size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? std::abs(t.off[i - 1]) : 0.0;
    const double right = i + 1 < n ? std::abs(t.off[i]) : 0.0;
    glo = std::min(glo, t.diag[i] - left - right);
    ghi = std::max(ghi, t.diag[i] + left + right);
  }

  std::vector<double> eigs(n);
  for (size_t k = 0; k < n; ++k) {
    double lo = glo, hi = ghi;
    int iter = 0;
    const int budget = 256;
    while (hi - lo > 4.0 * std::numeric_limits<double>::epsilon() *
                         std::max({1.0, std::abs(lo), std::abs(hi)})) {
      if (++iter > budget)
        fail(ErrorCode::ConvergenceFailure,
             "bisection failed to isolate an eigenvalue");
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (count_below(t, mid, pivmin) <= static_cast<int>(k))
        lo = mid;
      else
        hi = mid;
    }
    eigs[k] = 0.5 * (lo + hi);
  }
  return eigs;
}

}  // namespace

std::vector<double> legendre_fd_oracle(int n_grid, int max_mode) {
  if (n_grid < 16) fail(ErrorCode::InvalidParams, "need at least 16 grid points");
  if (max_mode < 0) fail(ErrorCode::InvalidParams, "max_mode must be >= 0");

  const size_t n = static_cast<size_t>(n_grid);
  const double dth = std::numbers::pi / static_cast<double>(n_grid);

  std::vector<double> face_sin(n + 1), center_sin(n);
  for (size_t j = 0; j <= n; ++j) face_sin[j] = std::sin(j * dth);
  for (size_t j = 0; j < n; ++j)
    center_sin[j] = std::sin((static_cast<double>(j) + 0.5) * dth);

  std::vector<double> merged;
  merged.reserve((2 * static_cast<size_t>(max_mode) + 1) * n);
  for (int m = 0; m <= max_mode; ++m) {
    Tridiagonal t;
    t.diag.resize(n);
    t.off.resize(n - 1);
    const double mm = static_cast<double>(m) * m;
    for (size_t j = 0; j < n; ++j) {
      t.diag[j] = (face_sin[j] + face_sin[j + 1]) / (dth * dth * center_sin[j]) +
                  mm / (center_sin[j] * center_sin[j]);
    }
    for (size_t j = 0; j + 1 < n; ++j) {
      t.off[j] = -face_sin[j + 1] /
                 (dth * dth * std::sqrt(center_sin[j] * center_sin[j + 1]));
    }
    const std::vector<double> eigs = all_eigenvalues(t);
    merged.insert(merged.end(), eigs.begin(), eigs.end());
    if (m > 0) merged.insert(merged.end(), eigs.begin(), eigs.end());
  }
  std::sort(merged.begin(), merged.end());
  return merged;
}

}  // namespace cmcb
