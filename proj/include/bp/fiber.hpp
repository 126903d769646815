#pragma once

#include <optional>

#include "bp/field.hpp"
#include "bp/params.hpp"

namespace bp {

/// Mass-preserving dilation u^t(x) = t^{3/2} u(t x), resampled onto the
/// same grid.  Errors out when the support escapes the grid (mass loss
/// beyond 1e-8 relative).
RadialField dilate(const RadialField& u, double t);

/// Fiber map: energy along the dilation,
/// Phi_u(t) = (t^2/2) A + (t/4)(H - Y_{1/t}) - (mu t^{3(p-2)/2}/p) C
///            - (t^6/6) D.
/// Phi_u(1) = I(u) exactly.
double fiber_value(const RadialField& u, double t, const ModelParams& params);

/// d/dt Phi_u at t = 1; same closed form as the Pohozaev functional Q.
double fiber_derivative_at_1(const RadialField& u, const ModelParams& params);

struct FiberScan {
  std::vector<double> t_values;
  std::vector<double> phi_values;
  double q_at_1 = 0.0;
  std::optional<double> argmin_local;  // t of first discrete local min
};

FiberScan scan_fiber(const RadialField& u, const ModelParams& params,
                     double t_min, double t_max, int count);

/// Scaling path u_theta(x) = theta^{(1+3 beta)/2} u(theta^beta x);
/// mass(u_theta) = theta * mass(u).
RadialField scaling_path_field(const RadialField& u, double theta,
                               double beta);

/// f(theta, u) = I(u_theta) - theta I(u), assembled from the analytic
/// scaling laws plus one screened-kernel evaluation at rate theta^{-beta}
/// (no resampling).  f(1, u) = 0 exactly.
double scaling_path_value(const RadialField& u, double theta, double beta,
                          const ModelParams& params);

/// d/dtheta f at theta = 1:
///   beta A + [ (1+beta) B - 4 beta E ] / 4
///   - (mu/p) ((1+3 beta) p/2 - 3 beta - 1) C - (2 + 6 beta) D / 6,
/// affine in beta with slope Q(u).
double scaling_path_derivative_at_1(const RadialField& u, double beta,
                                    const ModelParams& params);

struct ScalingPathProbe {
  double beta = 0.0;
  std::vector<double> theta_values;
  std::vector<double> f_values;
  double fprime_at_1 = 0.0;
};

ScalingPathProbe probe_scaling_path(const RadialField& u, double beta,
                                    const ModelParams& params, double th_min,
                                    double th_max, int count);

}  // namespace bp
