#include "bp/functional.hpp"

#include <cmath>
#include <limits>

#include "bp/kernels.hpp"

namespace bp {

namespace {

EnergyBreakdown assemble(const RadialField& u, const ModelParams& params) {
  EnergyBreakdown b;
  b.A = grad_norm_sq(u);
  b.H = coulomb_energy(u);
  const double Y1 = yukawa_double_energy(u, 1.0);
  b.B = b.H - Y1;
  b.C = lp_power(u, params.p);
  b.D = lp_power(u, 6.0);
  b.E = exp_double_energy(u);
  b.mass = mass(u);
  b.T = 0.25 * b.B - params.mu / params.p * b.C - b.D / 6.0;
  b.I = 0.5 * b.A + b.T;
  b.Q = b.A + 0.25 * b.B - b.E -
        1.5 * params.mu * (params.p - 2.0) / params.p * b.C - b.D;
  b.lambda =
      b.mass > 0.0
          ? (b.A + b.B - params.mu * b.C - b.D) / b.mass
          : std::numeric_limits<double>::quiet_NaN();
  b.h_bound = std::numeric_limits<double>::quiet_NaN();
  return b;
}

}  // namespace

EnergyBreakdown energy(const RadialField& u, const ModelParams& params) {
  return assemble(u, params);
}

EnergyBreakdown energy(const RadialField& u, const ModelParams& params,
                       const ThresholdConstants& consts) {
  EnergyBreakdown b = assemble(u, params);
  b.h_bound = h_c(std::sqrt(b.A), params.c, consts);
  return b;
}

RadialField gradient(const RadialField& u, const ModelParams& params) {
  const auto& md = u.grid->mass_diag();
  std::vector<double> ku;
  u.grid->stiffness_apply(u.v, ku);
  const auto phi = bp_potential(u);
  RadialField g{u.grid, std::vector<double>(u.v.size())};
  const double pm2 = params.p - 2.0;
  for (std::size_t i = 0; i < u.v.size(); ++i) {
    const double ui = u.v[i];
    const double u2 = ui * ui;
    g.v[i] = ku[i] / md[i] + phi.v[i] * ui -
             params.mu * std::pow(std::abs(ui), pm2) * ui - u2 * u2 * ui;
  }
  return g;
}

double pohozaev_Q(const RadialField& u, const ModelParams& params) {
  return energy(u, params).Q;
}

double lagrange_lambda(const RadialField& u, const ModelParams& params) {
  const double m = mass(u);
  if (!(m > 1e-15))
    throw std::invalid_argument("lagrange_lambda: zero-mass field");
  const EnergyBreakdown b = energy(u, params);
  return (b.A + b.B - params.mu * b.C - b.D) / m;
}

IdentityResiduals identity_residuals(const RadialField& u,
                                     const ModelParams& params,
                                     double lambda) {
  const EnergyBreakdown b = energy(u, params);
  IdentityResiduals res;
  res.nehari = b.A + b.B - params.mu * b.C - b.D - lambda * b.mass;
  res.pohozaev = 0.5 * b.A + 1.25 * b.B + b.E - 1.5 * lambda * b.mass -
                 3.0 * params.mu / params.p * b.C - 0.5 * b.D;
  return res;
}

LowerBound lower_bound_h(const RadialField& u, const ModelParams& params,
                         const ThresholdConstants& consts) {
  const double m = mass(u);
  if (std::abs(m - params.c) > 1e-8 * std::max(1.0, params.c))
    throw std::invalid_argument("lower_bound_h: mass(u) != params.c");
  const EnergyBreakdown b = energy(u, params);
  LowerBound lb;
  lb.bound = h_c(std::sqrt(b.A), params.c, consts);
  lb.slack = b.I - lb.bound;
  return lb;
}

}  // namespace bp
