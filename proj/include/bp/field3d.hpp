#pragma once

#include <array>
#include <vector>

#include "bp/field.hpp"
#include "bp/params.hpp"

namespace bp {

enum class KernelFamily { coulomb, yukawa, bp, pure_exponential };

/// Kernel of the pairwise double integral: 1/w, e^{-mw}/w, (1-e^{-w})/w
/// or e^{-w}.  Singular families get their same-cell average from an exact
/// pair-distribution quadrature (see self_cell_average).
struct KernelKind {
  KernelFamily family = KernelFamily::coulomb;
  double m = 1.0;  // yukawa rate

  static KernelKind coulomb() { return {KernelFamily::coulomb, 0.0}; }
  static KernelKind yukawa(double m);
  static KernelKind bp() { return {KernelFamily::bp, 0.0}; }
  static KernelKind pure_exponential() {
    return {KernelFamily::pure_exponential, 0.0};
  }

  double operator()(double w) const;
};

/// Low-resolution Cartesian sample of a function on [-extent, extent]^3,
/// n <= 48 points per axis.  Oracle-only representation.
struct Field3D {
  double extent = 0.0;
  int n = 0;
  std::vector<double> v;  // ((ix*n)+iy)*n+iz

  double h() const { return 2.0 * extent / n; }
  double coord(int i) const { return -extent + (i + 0.5) * h(); }
  double& at(int ix, int iy, int iz) { return v[(ix * n + iy) * n + iz]; }
  double at(int ix, int iy, int iz) const { return v[(ix * n + iy) * n + iz]; }
};

Field3D make_field3d(double extent, int n);

/// Sample the even extension of a radial field on the cube.
Field3D embed_radial(const RadialField& u, double extent, int n);

/// sum v^2 h^3 (the 3D mass).
double mass3d(const Field3D& f);

/// \int\int f^2(x) f^2(y) K(|x-y|) dx dy by direct double sum over cells.
/// Self-cell pairs use the exact same-cell average of K.  OpenMP over the
/// outer cell index with ordered per-thread partials.
double brute_force_double(const Field3D& f, const KernelKind& kernel);

namespace ref {
/// Single-threaded reference of the same sum, kept for testing.
double brute_force_double_serial(const Field3D& f, const KernelKind& kernel);
}  // namespace ref

/// All four m=1 kernels in one pass over cell pairs (shared sqrt/exp).
struct BruteForceSet {
  double coulomb = 0.0;    // \int\int f^2 f^2 / w
  double yukawa1 = 0.0;    // \int\int f^2 f^2 e^{-w} / w
  double bp = 0.0;         // \int\int f^2 f^2 (1 - e^{-w}) / w
  double pure_exp = 0.0;   // \int\int f^2 f^2 e^{-w}
};
BruteForceSet brute_force_all(const Field3D& f);

/// Potential \int f^2(y) K(|x-y|) dy at an arbitrary point (single sum;
/// pick off-grid points to avoid the self-cell).
double potential_at(const Field3D& f, const KernelKind& kernel,
                    const std::array<double, 3>& x);

/// Cross term \int\int f^2(x) g^2(y) K(|x-y|) dx dy (one ordering).
double brute_force_cross(const Field3D& f, const Field3D& g,
                         const KernelKind& kernel);

/// T(u1+u2) - T(u1) - T(u2) with T = B/4 - (mu/p) C - D/6, all terms
/// evaluated on the 3D grid.
double splitting_defect(const Field3D& u1, const Field3D& u2,
                        const ModelParams& params);

/// Exact same-cell pair average of K over a cube cell of side h:
/// E[K(|x-y|)] for x, y independent uniform in the cell.
double self_cell_average(const KernelKind& kernel, double h);

}  // namespace bp
