#pragma once

#include "bp/constants.hpp"
#include "bp/field.hpp"
#include "bp/params.hpp"

namespace bp {

/// Every scalar functional of a field under given parameters.
///
/// I = A/2 + B/4 - (mu/p) C - D/6 and T = I - A/2 hold exactly as
/// assembled; B <= H; A, B, C, D, H, E are all nonnegative.
struct EnergyBreakdown {
  double A = 0.0;       // \int |grad u|^2
  double B = 0.0;       // \int phi_u u^2
  double C = 0.0;       // \int |u|^p
  double D = 0.0;       // \int |u|^6
  double H = 0.0;       // (1/4pi) \int\int u^2 u^2 / |x-y|
  double E = 0.0;       // (1/16pi) \int\int e^{-|x-y|} u^2 u^2
  double T = 0.0;       // B/4 - (mu/p) C - D/6
  double I = 0.0;       // A/2 + T
  double Q = 0.0;       // A + B/4 - E - (3 mu (p-2) / 2p) C - D
  double lambda = 0.0;  // (A + B - mu C - D) / mass
  double h_bound = 0.0; // h_c(sqrt(A)); NaN without threshold constants
  double mass = 0.0;
};

EnergyBreakdown energy(const RadialField& u, const ModelParams& params);
EnergyBreakdown energy(const RadialField& u, const ModelParams& params,
                       const ThresholdConstants& consts);

/// Euler-Lagrange map -Lap u + phi_u u - mu |u|^{p-2} u - |u|^4 u, with the
/// Laplacian in discrete divergence form so that
/// inner(gradient(u), v) = d/de I(u + e v) at e = 0 exactly in the discrete
/// functional (the lambda u term is handled by sphere projection).
RadialField gradient(const RadialField& u, const ModelParams& params);

/// Q(u) = A + B/4 - E - (3 mu (p-2) / 2p) C - D; the fiber-map derivative
/// at t = 1 and zero at every weak solution.
double pohozaev_Q(const RadialField& u, const ModelParams& params);

/// lambda = (A + B - mu C - D) / mass; rejects zero-mass fields.
double lagrange_lambda(const RadialField& u, const ModelParams& params);

struct IdentityResiduals {
  double nehari = 0.0;    // A + B - mu C - D - lambda * mass
  double pohozaev = 0.0;  // A/2 + 5B/4 + E - (3 lambda/2) mass
                          //   - (3 mu / p) C - D/2
};

/// Signed residuals of the two stationarity identities at a given lambda.
/// For any lambda, (3/2) nehari - pohozaev = Q(u).
IdentityResiduals identity_residuals(const RadialField& u,
                                     const ModelParams& params, double lambda);

struct LowerBound {
  double bound = 0.0;  // h_c(sqrt(A))
  double slack = 0.0;  // I - bound
};

/// Barrier evaluation for u on S(c); rejects mass mismatch beyond 1e-8.
LowerBound lower_bound_h(const RadialField& u, const ModelParams& params,
                         const ThresholdConstants& consts);

}  // namespace bp
