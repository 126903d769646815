#pragma once

#include <cstdint>

#include "bp/field.hpp"

namespace bp {

/// Inequality constants and the closed-form thresholds they induce.
///
/// K_GN and K_H come from trial-family maximization and are inflated before
/// use, so the barrier h_c stays a true lower bound; S is evaluated on the
/// extremal profile and is an under-estimate (truncation loses kinetic
/// mass), which is the safe direction for the same reason.
struct ThresholdConstants {
  double K_GN = 0.0;
  double K_H = 0.0;
  double S = 0.0;
  double K = 0.0;
  double c0 = 0.0;
  double rho0 = 0.0;
  double beta0 = 0.0;  // 1/2 - rho0^2 / (6 S^3) > 0
  double p = 0.0;
  double mu = 0.0;

  struct Provenance {
    double kgn_raw = 0.0;
    double kh_raw = 0.0;
    double inflation = 1.0;
    double sobolev_err = 0.0;
    int corpus_size = 0;
    int ascent_steps = 0;
    std::uint64_t seed = 0;
    std::size_t grid_nodes = 0;
    double grid_rmax = 0.0;
  } prov;
};

struct SobolevEstimate {
  double value = 0.0;
  double error_estimate = 0.0;  // Richardson difference across two grids
};

/// Kinetic/L6 quotient on the extremal profile W = 3^{1/4} (1+r^2)^{-1/2},
/// Richardson-extrapolated across two grid resolutions.
SobolevEstimate sobolev_constant();

struct EstimateOptions {
  std::uint64_t seed = 20240817;
  int corpus_size = 48;
  int ascent_steps = 240;
  double inflation = 1.05;
  std::size_t grid_nodes = 1024;
  double grid_rmax = 40.0;
};

/// max over a trial family (plus local ascent) of
/// ||u||_p^p / (A^{3(p-2)/4} mass^{(6-p)/4}), inflated.  2 < p < 6.
double kgn_estimate(double p, const EstimateOptions& opts = {});

/// Same protocol for the quotient (4 pi H) / (sqrt(A) mass^{3/2}).
double kh_estimate(const EstimateOptions& opts = {});

/// Closed-form thresholds: with X = -3(3p-10) mu K_GN S^3 / (4p) > 0,
///   K    = (mu/p) K_GN X^{(3p-10)/(3(6-p))} + X^{8/(3(6-p))} / (6 S^3),
///   c0   = (1/(2K))^{3/2},
///   rho0 = X^{4/(3(6-p))} c0^{1/3}.
/// Requires 2 < p < 10/3.  Validates h_{c0}(sqrt(rho0)) = 0 on construction.
ThresholdConstants thresholds(double mu, double p, double K_GN, double S);

/// Barrier h_c(t) = t^2/2 - (mu K_GN / p) c^{(6-p)/4} t^{3(p-2)/2}
///                  - t^6 / (6 S^3).
double h_c(double t, double c, const ThresholdConstants& consts);

/// Full pipeline: S + K_GN + K_H estimation and threshold assembly.
ThresholdConstants estimate_constants(double mu, double p,
                                      const EstimateOptions& opts = {});

/// The scale-invariant quotients themselves (exposed for tests).
double gn_quotient(const RadialField& u, double p);
double hls_quotient(const RadialField& u);

}  // namespace bp
