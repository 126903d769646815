#include "bp/kernels.hpp"

#include <cmath>

namespace bp {

namespace {
constexpr double kPi = 3.14159265358979323846;

// a_j = w_j u_j^2 r_j, the line density entering every screened sum
std::vector<double> line_density(const RadialField& u) {
  const auto& r = u.grid->r();
  const auto& w = u.grid->w();
  std::vector<double> a(u.v.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    a[j] = w[j] * u.v[j] * u.v[j] * r[j];
  return a;
}
}  // namespace

RadialField coulomb_potential(const RadialField& u) {
  const auto& r = u.grid->r();
  const auto& w = u.grid->w();
  const std::size_t n = u.v.size();
  RadialField V{u.grid, std::vector<double>(n)};

  // interior: prefix of w u^2 r^2; exterior: suffix of w u^2 r
  double in = 0.0;
  std::vector<double> pre(n);
  for (std::size_t j = 0; j < n; ++j) {
    in += w[j] * u.v[j] * u.v[j] * r[j] * r[j];
    pre[j] = in;
  }
  double out = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    V.v[i] = 4.0 * kPi * (pre[i] / r[i] + out);
    out += w[i] * u.v[i] * u.v[i] * r[i];
  }
  return V;
}

RadialField yukawa_potential(const RadialField& u, double m) {
  if (!(m > 0.0))
    throw std::invalid_argument("yukawa_potential: m must be > 0");
  const auto& r = u.grid->r();
  const std::size_t n = u.v.size();
  const auto a = line_density(u);
  RadialField V{u.grid, std::vector<double>(n)};

  // P_i = sum_{j<=i} e^{-m(r_i - r_j)} a_j      (forward recurrence)
  // Q_i = sum_{j>i}  e^{-m(r_j - r_i)} a_j      (backward recurrence)
  // T   = sum_j      e^{-m r_j} a_j
  // V_Y(r_i) = (2 pi / (m r_i)) [P_i + Q_i - e^{-m r_i} T]
  std::vector<double> P(n), Q(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) acc *= std::exp(-m * (r[i] - r[i - 1]));
    acc += a[i];
    P[i] = acc;
  }
  acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    Q[i] = acc;
    acc = (acc + a[i]) * (i > 0 ? std::exp(-m * (r[i] - r[i - 1])) : 1.0);
  }
  double T = 0.0;
  for (std::size_t j = 0; j < n; ++j) T += a[j] * std::exp(-m * r[j]);
  for (std::size_t i = 0; i < n; ++i)
    V.v[i] = (2.0 * kPi / (m * r[i])) * (P[i] + Q[i] - std::exp(-m * r[i]) * T);
  return V;
}

RadialField bp_potential(const RadialField& u) {
  const auto vc = coulomb_potential(u);
  const auto vy = yukawa_potential(u, 1.0);
  RadialField phi{u.grid, std::vector<double>(u.v.size())};
  for (std::size_t i = 0; i < phi.v.size(); ++i)
    phi.v[i] = (vc.v[i] - vy.v[i]) / (4.0 * kPi);
  return phi;
}

double bp_energy(const RadialField& u) {
  const auto phi = bp_potential(u);
  const auto& md = u.grid->mass_diag();
  double s = 0.0;
  for (std::size_t i = 0; i < u.v.size(); ++i)
    s += md[i] * phi.v[i] * u.v[i] * u.v[i];
  return s;
}

double coulomb_energy(const RadialField& u) {
  const auto vc = coulomb_potential(u);
  const auto& r = u.grid->r();
  const auto& w = u.grid->w();
  double s = 0.0;
  for (std::size_t i = 0; i < u.v.size(); ++i)
    s += w[i] * u.v[i] * u.v[i] * vc.v[i] * r[i] * r[i];
  return s;
}

double yukawa_double_energy(const RadialField& u, double m) {
  const auto vy = yukawa_potential(u, m);
  const auto& r = u.grid->r();
  const auto& w = u.grid->w();
  double s = 0.0;
  for (std::size_t i = 0; i < u.v.size(); ++i)
    s += w[i] * u.v[i] * u.v[i] * vy.v[i] * r[i] * r[i];
  return s;
}

double exp_double_energy(const RadialField& u) {
  const auto& r = u.grid->r();
  const std::size_t n = u.v.size();
  const auto a = line_density(u);

  // inner(r_i) = sum_j a_j [ (1+|r_i-r_j|) e^{-|r_i-r_j|}
  //                          - (1+r_i+r_j) e^{-(r_i+r_j)} ]
  // via shifted recurrences: M0/M1 forward (j <= i), N0/N1 backward (j > i),
  // and full sums T0/T1 for the separable e^{-(r+s)} part.
  std::vector<double> M0(n), M1(n), N0(n), N1(n);
  double m0 = 0.0, m1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      const double d = r[i] - r[i - 1];
      const double e = std::exp(-d);
      m1 = e * (m1 + d * m0);
      m0 = e * m0;
    }
    m0 += a[i];
    M0[i] = m0;
    M1[i] = m1;
  }
  double n0 = 0.0, n1 = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    N0[i] = n0;
    N1[i] = n1;
    if (i > 0) {
      const double d = r[i] - r[i - 1];
      const double e = std::exp(-d);
      n1 = e * (n1 + (n0 + a[i]) * d);
      n0 = e * (n0 + a[i]);
    }
  }
  double T0 = 0.0, T1 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double e = std::exp(-r[j]);
    T0 += a[j] * e;
    T1 += a[j] * r[j] * e;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double er = std::exp(-r[i]);
    const double inner =
        M0[i] + M1[i] + N0[i] + N1[i] - er * ((1.0 + r[i]) * T0 + T1);
    s += a[i] * inner;
  }
  return 0.5 * kPi * s;
}

namespace ref {

RadialField coulomb_potential_direct(const RadialField& u) {
  const auto& r = u.grid->r();
  const auto& w = u.grid->w();
  const std::size_t n = u.v.size();
  RadialField V{u.grid, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      s += w[j] * u.v[j] * u.v[j] * r[j] * r[j] / std::max(r[i], r[j]);
    V.v[i] = 4.0 * kPi * s;
  }
  return V;
}

RadialField yukawa_potential_direct(const RadialField& u, double m) {
  const auto& r = u.grid->r();
  const auto& w = u.grid->w();
  const std::size_t n = u.v.size();
  RadialField V{u.grid, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double aj = w[j] * u.v[j] * u.v[j] * r[j];
      s += aj * (std::exp(-m * std::abs(r[i] - r[j])) -
                 std::exp(-m * (r[i] + r[j])));
    }
    V.v[i] = (2.0 * kPi / (m * r[i])) * s;
  }
  return V;
}

double exp_double_energy_direct(const RadialField& u) {
  const auto& r = u.grid->r();
  const std::size_t n = u.v.size();
  const auto a = line_density(u);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::abs(r[i] - r[j]);
      const double q = r[i] + r[j];
      inner += a[j] * ((1.0 + d) * std::exp(-d) - (1.0 + q) * std::exp(-q));
    }
    s += a[i] * inner;
  }
  return 0.5 * kPi * s;
}

double yukawa_double_energy_direct(const RadialField& u, double m) {
  const auto vy = yukawa_potential_direct(u, m);
  const auto& r = u.grid->r();
  const auto& w = u.grid->w();
  double s = 0.0;
  for (std::size_t i = 0; i < u.v.size(); ++i)
    s += w[i] * u.v[i] * u.v[i] * vy.v[i] * r[i] * r[i];
  return s;
}

}  // namespace ref

namespace par {

RadialField yukawa_potential_direct(const RadialField& u, double m) {
  const auto& r = u.grid->r();
  const auto& w = u.grid->w();
  const int n = static_cast<int>(u.v.size());
  RadialField V{u.grid, std::vector<double>(u.v.size())};
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      const double aj = w[j] * u.v[j] * u.v[j] * r[j];
      s += aj * (std::exp(-m * std::abs(r[i] - r[j])) -
                 std::exp(-m * (r[i] + r[j])));
    }
    V.v[i] = (2.0 * kPi / (m * r[i])) * s;
  }
  return V;
}

double exp_double_energy_direct(const RadialField& u) {
  const auto& r = u.grid->r();
  const int n = static_cast<int>(u.v.size());
  const auto a = line_density(u);
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (int i = 0; i < n; ++i) {
    double inner = 0.0;
    for (int j = 0; j < n; ++j) {
      const double d = std::abs(r[i] - r[j]);
      const double q = r[i] + r[j];
      inner += a[j] * ((1.0 + d) * std::exp(-d) - (1.0 + q) * std::exp(-q));
    }
    s += a[i] * inner;
  }
  return 0.5 * kPi * s;
}

}  // namespace par

}  // namespace bp
