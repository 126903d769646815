#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace bp {

enum class GridScheme { uniform, graded };

std::string to_string(GridScheme s);
GridScheme scheme_from_string(const std::string& s);

/// Radial quadrature grid on (0, r_max].
///
/// Nodes and weights come from composite Gauss-Legendre panels so that
/// integrals of smooth integrands over [0, r_max] are exact to machine
/// precision at the default resolutions.  The graded scheme maps panel
/// edges through k -> r_max (k/P)^2, clustering nodes near the origin.
///
/// Derivatives use 5-point stencils: even extension across r = 0
/// (radial profiles are even) and one-sided rows at r_max.
class RadialGrid {
 public:
  RadialGrid(std::size_t node_count, double r_max, GridScheme scheme);

  std::size_t size() const { return r_.size(); }
  double r_max() const { return r_max_; }
  GridScheme scheme() const { return scheme_; }
  std::uint64_t id() const { return id_; }
  const std::vector<double>& r() const { return r_; }
  const std::vector<double>& w() const { return w_; }

  /// Sum of w_i f_i, the quadrature of f over [0, r_max].
  double quad(const std::vector<double>& f) const;

  /// d/dr of nodal values.
  std::vector<double> derivative(const std::vector<double>& v) const;

  /// Lumped radial L2 measure, m_i = 4*pi*w_i*r_i^2.
  const std::vector<double>& mass_diag() const;

  /// K v where K is the symmetric stiffness 4*pi*D^T diag(w r^2) D,
  /// i.e. A(u) = u^T K u equals the discrete Dirichlet integral.
  void stiffness_apply(const std::vector<double>& v,
                       std::vector<double>& out) const;

  /// Solve (M + K) x = rhs with M = diag(mass_diag).  Banded Cholesky,
  /// factored once per grid.
  std::vector<double> h1_solve(const std::vector<double>& rhs) const;

  struct DerivRow {
    int first;
    int len;
    double c[5];
  };
  const std::vector<DerivRow>& deriv_rows() const;

 private:
  void build_derivative() const;
  void build_stiffness() const;
  void build_h1() const;

  std::size_t node_count_;
  double r_max_;
  GridScheme scheme_;
  std::uint64_t id_;
  std::vector<double> r_, w_;
  mutable std::vector<double> mdiag_;

  mutable std::once_flag deriv_once_, stiff_once_, h1_once_;
  mutable std::vector<DerivRow> rows_;
  // kband_[d][i] = K(i, i+d), d = 0..4
  mutable std::vector<std::vector<double>> kband_;
  // banded Cholesky factor of M + K (lower, bandwidth 4)
  mutable std::vector<std::vector<double>> h1band_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Build a grid.  node_count >= 16, r_max > 0.
GridPtr make_grid(std::size_t node_count, double r_max, GridScheme scheme);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Finite-difference weights for the m-th derivative at x0 over the given
/// nodes (Fornberg's recursion; nodes need not be equispaced).
std::vector<double> fd_weights(double x0, const std::vector<double>& xs, int m);

}  // namespace bp
