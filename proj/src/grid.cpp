#include "bp/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "bp/params.hpp"

namespace bp {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr int kBW = 4;  // stiffness bandwidth with 5-point rows

std::atomic<std::uint64_t> g_grid_id{1};
}  // namespace

std::string to_string(GridScheme s) {
  return s == GridScheme::uniform ? "uniform" : "graded";
}

GridScheme scheme_from_string(const std::string& s) {
  if (s == "uniform") return GridScheme::uniform;
  if (s == "graded") return GridScheme::graded;
  throw std::invalid_argument("unknown grid scheme: " + s);
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double xi = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pn = 0.0, dpn = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, pm = 0.0;
      for (int k = 0; k < n; ++k) {
        const double pk = ((2.0 * k + 1.0) * xi * p0 - k * pm) / (k + 1.0);
        pm = p0;
        p0 = pk;
      }
      pn = p0;
      dpn = n * (xi * p0 - pm) / (xi * xi - 1.0);
      const double dx = pn / dpn;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x[n - 1 - i] = xi;
    x[i] = -xi;
    const double wi = 2.0 / ((1.0 - xi * xi) * dpn * dpn);
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
}

std::vector<double> fd_weights(double x0, const std::vector<double>& xs,
                               int m) {
  // Fornberg (1988).  c[j][k]: weight of node j for derivative order k.
  const int n = static_cast<int>(xs.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> out(n);
  for (int j = 0; j < n; ++j) out[j] = c[j][m];
  return out;
}

RadialGrid::RadialGrid(std::size_t node_count, double r_max, GridScheme scheme)
    : node_count_(node_count),
      r_max_(r_max),
      scheme_(scheme),
      id_(g_grid_id.fetch_add(1)) {
  if (node_count < 16)
    throw std::invalid_argument("RadialGrid: node_count must be >= 16");
  if (!(r_max > 0.0) || !std::isfinite(r_max))
    throw std::invalid_argument("RadialGrid: r_max must be positive");

  const int q = 8;  // Gauss-Legendre points per panel
  const int panels = static_cast<int>(node_count) / q;
  const int rem = static_cast<int>(node_count) - panels * q;

  std::vector<double> edges(panels + 1);
  for (int k = 0; k <= panels; ++k) {
    const double t = static_cast<double>(k) / panels;
    edges[k] = (scheme == GridScheme::uniform) ? r_max * t : r_max * t * t;
  }

  std::vector<double> gx, gw;
  r_.reserve(node_count);
  w_.reserve(node_count);
  for (int k = 0; k < panels; ++k) {
    const int qk = (k == panels - 1) ? q + rem : q;
    gauss_legendre(qk, gx, gw);
    const double a = edges[k], b = edges[k + 1];
    const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
    for (int j = 0; j < qk; ++j) {
      r_.push_back(mid + hw * gx[j]);
      w_.push_back(hw * gw[j]);
    }
  }

  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (!(r_[i] > 0.0) || !(w_[i] > 0.0))
      throw std::invalid_argument("RadialGrid: nonpositive node or weight");
    if (i > 0 && !(r_[i] > r_[i - 1]))
      throw std::invalid_argument("RadialGrid: nodes not increasing");
  }
  double wsum = 0.0;
  for (double wi : w_) wsum += wi;
  if (std::abs(wsum - r_max) > 1e-12 * r_max)
    throw std::invalid_argument("RadialGrid: weight sum != r_max");

  mdiag_.resize(r_.size());
  for (std::size_t i = 0; i < r_.size(); ++i)
    mdiag_[i] = 4.0 * kPi * w_[i] * r_[i] * r_[i];
}

GridPtr make_grid(std::size_t node_count, double r_max, GridScheme scheme) {
  return std::make_shared<const RadialGrid>(node_count, r_max, scheme);
}

double RadialGrid::quad(const std::vector<double>& f) const {
  if (f.size() != r_.size())
    throw std::invalid_argument("quad: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w_[i] * f[i];
  return s;
}

const std::vector<double>& RadialGrid::mass_diag() const { return mdiag_; }

void RadialGrid::build_derivative() const {
  const int n = static_cast<int>(r_.size());
  rows_.resize(n);
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) {
    DerivRow row{};
    if (i <= 1) {
      // even extension across r = 0: mirrored nodes carry mirrored values
      // row 0: nodes {-r1,-r0,r0,r1,r2}; row 1: {-r0,r0,r1,r2,r3}
      const int nm = (i == 0) ? 2 : 1;  // mirrored count
      xs.clear();
      for (int k = nm - 1; k >= 0; --k) xs.push_back(-r_[k]);
      for (int k = 0; k < 5 - nm; ++k) xs.push_back(r_[k]);
      const auto wts = fd_weights(r_[i], xs, 1);
      row.first = 0;
      row.len = 5 - nm;
      for (int k = 0; k < 5; ++k) {
        const int phys = (k < nm) ? (nm - 1 - k) : (k - nm);
        row.c[phys] += wts[k];
      }
    } else {
      const int first = std::min(std::max(i - 2, 0), n - 5);
      xs.assign(r_.begin() + first, r_.begin() + first + 5);
      const auto wts = fd_weights(r_[i], xs, 1);
      row.first = first;
      row.len = 5;
      for (int k = 0; k < 5; ++k) row.c[k] = wts[k];
    }
    rows_[i] = row;
  }
}

const std::vector<RadialGrid::DerivRow>& RadialGrid::deriv_rows() const {
  std::call_once(deriv_once_, [this] { build_derivative(); });
  return rows_;
}

std::vector<double> RadialGrid::derivative(const std::vector<double>& v) const {
  const auto& rows = deriv_rows();
  std::vector<double> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const DerivRow& row = rows[i];
    double s = 0.0;
    for (int k = 0; k < row.len; ++k) s += row.c[k] * v[row.first + k];
    d[i] = s;
  }
  return d;
}

void RadialGrid::build_stiffness() const {
  const auto& rows = deriv_rows();
  const int n = static_cast<int>(r_.size());
  kband_.assign(kBW + 1, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    const DerivRow& row = rows[i];
    const double wi = mdiag_[i];  // 4*pi*w_i*r_i^2
    for (int a = 0; a < row.len; ++a) {
      for (int b = a; b < row.len; ++b) {
        const int ja = row.first + a, jb = row.first + b;
        kband_[jb - ja][ja] += wi * row.c[a] * row.c[b];
      }
    }
  }
}

void RadialGrid::stiffness_apply(const std::vector<double>& v,
                                 std::vector<double>& out) const {
  std::call_once(stiff_once_, [this] { build_stiffness(); });
  const int n = static_cast<int>(v.size());
  out.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = kband_[0][i] * v[i];
    for (int d = 1; d <= kBW; ++d) {
      if (i + d < n) s += kband_[d][i] * v[i + d];
      if (i - d >= 0) s += kband_[d][i - d] * v[i - d];
    }
    out[i] = s;
  }
}

void RadialGrid::build_h1() const {
  std::call_once(stiff_once_, [this] { build_stiffness(); });
  const int n = static_cast<int>(r_.size());
  // lower-banded Cholesky of M + K
  h1band_.assign(kBW + 1, std::vector<double>(n, 0.0));
  for (int d = 0; d <= kBW; ++d)
    for (int i = 0; i + d < n; ++i) h1band_[d][i] = kband_[d][i];
  for (int i = 0; i < n; ++i) h1band_[0][i] += mdiag_[i];

  // h1band_[d][j] holds L(j+d, j) after factorization
  for (int j = 0; j < n; ++j) {
    double djj = h1band_[0][j];
    for (int k = std::max(0, j - kBW); k < j; ++k) {
      const double ljk = h1band_[j - k][k];
      djj -= ljk * ljk;
    }
    if (!(djj > 0.0))
      throw numerical_error("h1_solve: factorization lost positivity");
    const double ljj = std::sqrt(djj);
    h1band_[0][j] = ljj;
    for (int i = j + 1; i <= std::min(n - 1, j + kBW); ++i) {
      double s = h1band_[i - j][j];
      for (int k = std::max({0, i - kBW, j - kBW}); k < j; ++k)
        s -= h1band_[i - k][k] * h1band_[j - k][k];
      h1band_[i - j][j] = s / ljj;
    }
  }
}

std::vector<double> RadialGrid::h1_solve(const std::vector<double>& rhs) const {
  std::call_once(h1_once_, [this] { build_h1(); });
  const int n = static_cast<int>(rhs.size());
  std::vector<double> x(rhs);
  // forward: L y = rhs
  for (int i = 0; i < n; ++i) {
    double s = x[i];
    for (int k = std::max(0, i - kBW); k < i; ++k)
      s -= h1band_[i - k][k] * x[k];
    x[i] = s / h1band_[0][i];
  }
  // backward: L^T x = y
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    for (int k = i + 1; k <= std::min(n - 1, i + kBW); ++k)
      s -= h1band_[k - i][i] * x[k];
    x[i] = s / h1band_[0][i];
  }
  return x;
}

}  // namespace bp
