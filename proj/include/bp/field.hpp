#pragma once

#include <random>
#include <vector>

#include "bp/grid.hpp"
#include "bp/params.hpp"

namespace bp {

/// Radial profile sampled on a grid; the solver's state vector.
/// Fields are value-semantic snapshots: operations return new fields.
struct RadialField {
  GridPtr grid;
  std::vector<double> v;

  std::size_t size() const { return v.size(); }
};

/// Zero field on a grid.
RadialField make_field(GridPtr grid);

/// u(r) = sqrt(c) (pi sigma^2)^{-3/4} exp(-r^2 / (2 sigma^2));
/// mass(u) = c, grad_norm_sq(u) = 3c / (2 sigma^2).
RadialField make_gaussian(double c, double sigma, GridPtr grid);

struct RandomFieldOpts {
  int min_bumps = 2;
  int max_bumps = 5;
  bool nonnegative = false;
  double max_center = 5.0;
};

/// Sum of a few randomly placed radial Gaussian bumps; smooth, decaying,
/// nonzero mass.  Deterministic for a given engine state.
RadialField make_random_smooth(GridPtr grid, std::mt19937_64& rng,
                               const RandomFieldOpts& opts = {});

void require_same_grid(const RadialField& a, const RadialField& b);

/// ||u||_2^2 = 4 pi \int u^2 r^2 dr.
double mass(const RadialField& u);

/// A(u) = \int |grad u|^2 = 4 pi \int u'(r)^2 r^2 dr.
double grad_norm_sq(const RadialField& u);

/// \int |u|^q = 4 pi \int |u|^q r^2 dr, q >= 2.
double lp_power(const RadialField& u, double q);

/// sqrt(c / mass(u)) * u.  Rejects degenerate fields (mass <= 1e-15).
RadialField normalize_mass(const RadialField& u, double c);

/// L2 pairing 4 pi \int u v r^2 dr.
double inner(const RadialField& u, const RadialField& v);

/// a*u + b*v on a shared grid.
RadialField axpy(double a, const RadialField& u, double b,
                 const RadialField& v);

RadialField scale(double a, const RadialField& u);

/// Value of the even extension of u at radius x: 4-point Lagrange through
/// neighbouring nodes, mirrored across r = 0, zero beyond r_max.
double interp_even(const RadialField& u, double x);

}  // namespace bp
