#pragma once

#include <stdexcept>
#include <string>

namespace bp {

/// Runtime numerical failure (non-convergence, degenerate data, ...).
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A verification/diagnostic check did not pass.
struct check_failure : std::runtime_error {
  explicit check_failure(const std::string& msg) : std::runtime_error(msg) {}
};

/// One problem instance: coefficient mu, subcritical exponent p, mass c.
///
/// Solver runs require p in (2, 8/3).  A relaxed mode accepts p in (2, 10/3)
/// for inequality and threshold experiments; the flag is carried into output.
struct ModelParams {
  double mu;
  double p;
  double c;
  bool relaxed = false;

  ModelParams(double mu_, double p_, double c_, bool relaxed_ = false)
      : mu(mu_), p(p_), c(c_), relaxed(relaxed_) {
    if (!(mu > 0.0)) throw std::invalid_argument("ModelParams: mu must be > 0");
    if (!(c > 0.0)) throw std::invalid_argument("ModelParams: c must be > 0");
    const double p_hi = relaxed_ ? 10.0 / 3.0 : 8.0 / 3.0;
    if (!(p_ > 2.0 && p_ < p_hi))
      throw std::invalid_argument("ModelParams: p out of range (2, " +
                                  std::string(relaxed_ ? "10/3" : "8/3") + ")");
  }
};

}  // namespace bp
