#include "bp/field.hpp"

#include <algorithm>
#include <cmath>

namespace bp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

RadialField make_field(GridPtr grid) {
  return RadialField{grid, std::vector<double>(grid->size(), 0.0)};
}

RadialField make_gaussian(double c, double sigma, GridPtr grid) {
  if (!(c > 0.0)) throw std::invalid_argument("make_gaussian: c must be > 0");
  if (!(sigma > 0.0))
    throw std::invalid_argument("make_gaussian: sigma must be > 0");
  RadialField u = make_field(grid);
  const double amp = std::sqrt(c) * std::pow(kPi * sigma * sigma, -0.75);
  const auto& r = grid->r();
  for (std::size_t i = 0; i < u.v.size(); ++i)
    u.v[i] = amp * std::exp(-r[i] * r[i] / (2.0 * sigma * sigma));
  return u;
}

RadialField make_random_smooth(GridPtr grid, std::mt19937_64& rng,
                               const RandomFieldOpts& opts) {
  std::uniform_int_distribution<int> nb(opts.min_bumps, opts.max_bumps);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.0, opts.max_center);
  std::uniform_real_distribution<double> width(0.4, 2.5);
  const auto& r = grid->r();
  for (int attempt = 0; attempt < 64; ++attempt) {
    RadialField u = make_field(grid);
    const int k = nb(rng);
    for (int b = 0; b < k; ++b) {
      double a = amp(rng);
      if (opts.nonnegative) a = 0.25 + std::abs(a);
      const double c0 = pos(rng);
      const double s = width(rng);
      for (std::size_t i = 0; i < u.v.size(); ++i) {
        const double d = r[i] - c0;
        u.v[i] += a * std::exp(-d * d / (2.0 * s * s));
      }
    }
    if (mass(u) > 1e-8) return u;
  }
  throw numerical_error("make_random_smooth: degenerate draw");
}

void require_same_grid(const RadialField& a, const RadialField& b) {
  if (!a.grid || !b.grid || a.grid->id() != b.grid->id())
    throw std::invalid_argument("fields do not share a grid");
}

double mass(const RadialField& u) {
  const auto& m = u.grid->mass_diag();
  double s = 0.0;
  for (std::size_t i = 0; i < u.v.size(); ++i) s += m[i] * u.v[i] * u.v[i];
  return s;
}

double grad_norm_sq(const RadialField& u) {
  const auto d = u.grid->derivative(u.v);
  const auto& m = u.grid->mass_diag();
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) s += m[i] * d[i] * d[i];
  return s;
}

double lp_power(const RadialField& u, double q) {
  if (!(q >= 2.0)) throw std::invalid_argument("lp_power: q must be >= 2");
  const auto& m = u.grid->mass_diag();
  double s = 0.0;
  if (q == 2.0) return mass(u);
  if (q == 6.0) {
    for (std::size_t i = 0; i < u.v.size(); ++i) {
      const double a = u.v[i] * u.v[i];
      s += m[i] * a * a * a;
    }
    return s;
  }
  for (std::size_t i = 0; i < u.v.size(); ++i)
    s += m[i] * std::pow(std::abs(u.v[i]), q);
  return s;
}

RadialField normalize_mass(const RadialField& u, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("normalize_mass: c must be > 0");
  const double m = mass(u);
  if (!(m > 1e-15))
    throw std::invalid_argument("normalize_mass: degenerate field (mass <= 1e-15)");
  return scale(std::sqrt(c / m), u);
}

double inner(const RadialField& u, const RadialField& v) {
  require_same_grid(u, v);
  const auto& m = u.grid->mass_diag();
  double s = 0.0;
  for (std::size_t i = 0; i < u.v.size(); ++i) s += m[i] * u.v[i] * v.v[i];
  return s;
}

RadialField axpy(double a, const RadialField& u, double b,
                 const RadialField& v) {
  require_same_grid(u, v);
  RadialField out{u.grid, std::vector<double>(u.v.size())};
  for (std::size_t i = 0; i < u.v.size(); ++i)
    out.v[i] = a * u.v[i] + b * v.v[i];
  return out;
}

RadialField scale(double a, const RadialField& u) {
  RadialField out{u.grid, u.v};
  for (double& x : out.v) x *= a;
  return out;
}

double interp_even(const RadialField& u, double x) {
  const auto& r = u.grid->r();
  const int n = static_cast<int>(r.size());
  x = std::abs(x);
  if (x > u.grid->r_max()) return 0.0;

  // nodes k-1..k+2 around x, shifted into range; mirror below r_0
  auto it = std::upper_bound(r.begin(), r.end(), x);
  int k = static_cast<int>(it - r.begin());  // first node > x

  double xs[4], ys[4];
  if (k <= 1) {
    // near the origin: even-extended stencil {-r1, -r0, r0, r1}
    xs[0] = -r[1]; xs[1] = -r[0]; xs[2] = r[0]; xs[3] = r[1];
    ys[0] = u.v[1]; ys[1] = u.v[0]; ys[2] = u.v[0]; ys[3] = u.v[1];
  } else {
    int first = std::min(std::max(k - 2, 0), n - 4);
    for (int j = 0; j < 4; ++j) {
      xs[j] = r[first + j];
      ys[j] = u.v[first + j];
    }
  }
  double s = 0.0;
  for (int j = 0; j < 4; ++j) {
    double lj = 1.0;
    for (int i = 0; i < 4; ++i)
      if (i != j) lj *= (x - xs[i]) / (xs[j] - xs[i]);
    s += lj * ys[j];
  }
  return s;
}

}  // namespace bp
