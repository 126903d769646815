#include "bp/constants.hpp"

#include <algorithm>
#include <cmath>

#include "bp/kernels.hpp"

namespace bp {

namespace {
constexpr double kPi = 3.14159265358979323846;

RadialField algebraic_profile(double b, double k, GridPtr grid) {
  // (1 + (r/b)^2)^{-k}; in H^1 for k > 3/4
  RadialField u = make_field(grid);
  const auto& r = grid->r();
  for (std::size_t i = 0; i < u.v.size(); ++i)
    u.v[i] = std::pow(1.0 + (r[i] / b) * (r[i] / b), -k);
  return u;
}

template <class Quotient>
double maximize_quotient(Quotient&& q, GridPtr grid,
                         const EstimateOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  double best = 0.0;
  RadialField best_u = make_field(grid);

  auto consider = [&](const RadialField& u) {
    const double val = q(u);
    if (std::isfinite(val) && val > best) {
      best = val;
      best_u = u;
    }
  };

  for (double sigma : {0.5, 0.75, 1.0, 1.5, 2.0})
    consider(make_gaussian(1.0, sigma, grid));
  for (double k : {1.0, 1.5, 2.0, 3.0})
    for (double b : {0.7, 1.0, 1.5}) consider(algebraic_profile(b, k, grid));
  for (int i = 0; i < opts.corpus_size; ++i)
    consider(make_random_smooth(grid, rng, {2, 5, true, 4.0}));

  // local ascent: accept random smooth perturbations that raise the quotient
  std::uniform_real_distribution<double> pos(0.0, 4.0), width(0.3, 2.0),
      amp(-1.0, 1.0);
  const auto& r = grid->r();
  double step = 0.2;
  for (int it = 0; it < opts.ascent_steps; ++it) {
    RadialField trial = best_u;
    const double c0 = pos(rng), s = width(rng), a = amp(rng);
    double vmax = 0.0;
    for (double x : best_u.v) vmax = std::max(vmax, std::abs(x));
    for (std::size_t i = 0; i < trial.v.size(); ++i) {
      const double d = r[i] - c0;
      trial.v[i] += step * a * vmax * std::exp(-d * d / (2.0 * s * s));
    }
    const double val = q(trial);
    if (std::isfinite(val) && val > best) {
      best = val;
      best_u = trial;
    } else {
      step = std::max(0.02, step * 0.995);
    }
  }
  return best;
}

}  // namespace

double gn_quotient(const RadialField& u, double p) {
  const double m = mass(u);
  const double A = grad_norm_sq(u);
  if (!(m > 1e-12) || !(A > 1e-14))
    throw std::invalid_argument("gn_quotient: degenerate field");
  const double C = lp_power(u, p);
  return C / (std::pow(A, 0.75 * (p - 2.0)) * std::pow(m, 0.25 * (6.0 - p)));
}

double hls_quotient(const RadialField& u) {
  const double m = mass(u);
  const double A = grad_norm_sq(u);
  if (!(m > 1e-12) || !(A > 1e-14))
    throw std::invalid_argument("hls_quotient: degenerate field");
  const double raw = 4.0 * kPi * coulomb_energy(u);
  return raw / (std::sqrt(A) * std::pow(m, 1.5));
}

SobolevEstimate sobolev_constant() {
  auto quotient = [](GridPtr grid) {
    RadialField w = make_field(grid);
    const auto& r = grid->r();
    const double amp = std::pow(3.0, 0.25);
    for (std::size_t i = 0; i < w.v.size(); ++i)
      w.v[i] = amp / std::sqrt(1.0 + r[i] * r[i]);
    return grad_norm_sq(w) / std::pow(lp_power(w, 6.0), 1.0 / 3.0);
  };
  const double coarse = quotient(make_grid(4096, 200.0, GridScheme::graded));
  const double fine = quotient(make_grid(8192, 200.0, GridScheme::graded));
  SobolevEstimate est;
  est.value = fine + (fine - coarse) / 3.0;  // second-order Richardson
  est.error_estimate = std::abs(fine - coarse) / 3.0;
  return est;
}

double kgn_estimate(double p, const EstimateOptions& opts) {
  if (!(p > 2.0 && p < 6.0))
    throw std::invalid_argument("kgn_estimate: need 2 < p < 6");
  GridPtr grid = make_grid(opts.grid_nodes, opts.grid_rmax, GridScheme::graded);
  const double raw =
      maximize_quotient([p](const RadialField& u) { return gn_quotient(u, p); },
                        grid, opts);
  return raw * opts.inflation;
}

double kh_estimate(const EstimateOptions& opts) {
  GridPtr grid = make_grid(opts.grid_nodes, opts.grid_rmax, GridScheme::graded);
  const double raw = maximize_quotient(
      [](const RadialField& u) { return hls_quotient(u); }, grid, opts);
  return raw * opts.inflation;
}

ThresholdConstants thresholds(double mu, double p, double K_GN, double S) {
  if (!(mu > 0.0)) throw std::invalid_argument("thresholds: mu must be > 0");
  if (!(p > 2.0 && p < 10.0 / 3.0))
    throw std::invalid_argument("thresholds: need 2 < p < 10/3");
  if (!(K_GN > 0.0 && S > 0.0))
    throw std::invalid_argument("thresholds: constants must be positive");

  ThresholdConstants tc;
  tc.K_GN = K_GN;
  tc.S = S;
  tc.p = p;
  tc.mu = mu;

  const double S3 = S * S * S;
  const double X = -3.0 * (3.0 * p - 10.0) * mu * K_GN * S3 / (4.0 * p);
  if (!(X > 0.0)) throw std::invalid_argument("thresholds: nonpositive base");
  const double e1 = (3.0 * p - 10.0) / (3.0 * (6.0 - p));
  const double e2 = 8.0 / (3.0 * (6.0 - p));
  const double e3 = 4.0 / (3.0 * (6.0 - p));
  tc.K = mu / p * K_GN * std::pow(X, e1) + std::pow(X, e2) / (6.0 * S3);
  tc.c0 = std::pow(0.5 / tc.K, 1.5);
  tc.rho0 = std::pow(X, e3) * std::cbrt(tc.c0);
  tc.beta0 = 0.5 - tc.rho0 * tc.rho0 / (6.0 * S3);

  // closed-form consistency: the barrier vanishes at (c0, rho0)
  const double t0 = std::sqrt(tc.rho0);
  const double term = 0.5 * tc.rho0;
  const double res = h_c(t0, tc.c0, tc);
  if (!(std::abs(res) <= 1e-10 * term))
    throw numerical_error("thresholds: h_{c0}(sqrt(rho0)) != 0");
  return tc;
}

double h_c(double t, double c, const ThresholdConstants& consts) {
  if (!(t > 0.0)) throw std::invalid_argument("h_c: t must be > 0");
  const double S3 = consts.S * consts.S * consts.S;
  return 0.5 * t * t -
         consts.mu * consts.K_GN / consts.p *
             std::pow(c, 0.25 * (6.0 - consts.p)) *
             std::pow(t, 1.5 * (consts.p - 2.0)) -
         std::pow(t, 6.0) / (6.0 * S3);
}

ThresholdConstants estimate_constants(double mu, double p,
                                      const EstimateOptions& opts) {
  const SobolevEstimate s = sobolev_constant();
  const double kgn = kgn_estimate(p, opts);
  ThresholdConstants tc = thresholds(mu, p, kgn, s.value);
  tc.K_H = kh_estimate(opts);
  tc.prov.kgn_raw = kgn / opts.inflation;
  tc.prov.kh_raw = tc.K_H / opts.inflation;
  tc.prov.inflation = opts.inflation;
  tc.prov.sobolev_err = s.error_estimate;
  tc.prov.corpus_size = opts.corpus_size;
  tc.prov.ascent_steps = opts.ascent_steps;
  tc.prov.seed = opts.seed;
  tc.prov.grid_nodes = opts.grid_nodes;
  tc.prov.grid_rmax = opts.grid_rmax;
  return tc;
}

}  // namespace bp
