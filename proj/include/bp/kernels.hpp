#pragma once

#include "bp/field.hpp"

namespace bp {

/// Newtonian potential of the radial charge u^2:
/// V_C(r) = 4 pi [ (1/r) \int_0^r u^2 s^2 ds + \int_r^rmax u^2 s ds ].
RadialField coulomb_potential(const RadialField& u);

/// Screened potential with rate m > 0:
/// V_Y(r) = (4 pi / (m r)) [ e^{-mr} \int_0^r sinh(ms) u^2 s ds
///                           + sinh(mr) \int_r^rmax e^{-ms} u^2 s ds ],
/// evaluated through overflow-free shifted-exponential recurrences.
RadialField yukawa_potential(const RadialField& u, double m);

/// phi_u = (V_C - V_Y(m=1)) / (4 pi); nonnegative.
RadialField bp_potential(const RadialField& u);

/// B(u) = \int phi_u u^2 dx = 4 pi \int phi_u u^2 r^2 dr.
double bp_energy(const RadialField& u);

/// H(u) = (1/4 pi) \int\int u^2(x) u^2(y) / |x-y| dx dy; H >= B.
double coulomb_energy(const RadialField& u);

/// Y_m(u) = (1/4 pi) \int\int e^{-m|x-y|} / |x-y| u^2 u^2 dx dy.
/// B = H - Y_1; the fiber map needs Y at m = 1/t.
double yukawa_double_energy(const RadialField& u, double m);

/// E(u) = (1/16 pi) \int\int e^{-|x-y|} u^2(x) u^2(y) dx dy.
/// Radial reduction: (pi/2) \int\int u^2 u^2 r s [ (1+|r-s|) e^{-|r-s|}
///   - (1+r+s) e^{-(r+s)} ] dr ds.
double exp_double_energy(const RadialField& u);

/// Direct O(N^2) pairwise quadratures of the same reductions.  Kept as the
/// reference implementations; `ref` is single-threaded, `par` is the OpenMP
/// kernel over the outer index.  The production prefix-sum path above must
/// agree with both to roundoff.
namespace ref {
RadialField coulomb_potential_direct(const RadialField& u);
RadialField yukawa_potential_direct(const RadialField& u, double m);
double exp_double_energy_direct(const RadialField& u);
double yukawa_double_energy_direct(const RadialField& u, double m);
}  // namespace ref

namespace par {
RadialField yukawa_potential_direct(const RadialField& u, double m);
double exp_double_energy_direct(const RadialField& u);
}  // namespace par

}  // namespace bp
