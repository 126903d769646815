#include "bp/field3d.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bp {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxN = 48;

// Quadrature rule for the relative-offset distribution of two independent
// uniform points in the unit cube: density prod_i (1 - |t_i|) on [-1,1]^3,
// folded to [0,1]^3 with weight 8.  The cubic map xi -> xi^3 resolves the
// integrable 1/|t| singularity at the origin.
struct PairRule {
  std::vector<std::array<double, 3>> t;
  std::vector<double> w;
};

const PairRule& pair_rule() {
  static const PairRule rule = [] {
    PairRule r;
    const int q = 20;
    std::vector<double> gx, gw;
    gauss_legendre(q, gx, gw);
    std::vector<double> xi(q), wi(q);
    for (int i = 0; i < q; ++i) {
      const double x = 0.5 * (gx[i] + 1.0);  // [0,1]
      const double ww = 0.5 * gw[i];
      xi[i] = x * x * x;
      wi[i] = ww * 3.0 * x * x;
    }
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          const double dens =
              8.0 * (1.0 - xi[a]) * (1.0 - xi[b]) * (1.0 - xi[c]);
          r.t.push_back({xi[a], xi[b], xi[c]});
          r.w.push_back(dens * wi[a] * wi[b] * wi[c]);
        }
    return r;
  }();
  return rule;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}
}  // namespace

KernelKind KernelKind::yukawa(double m) {
  if (!(m > 0.0)) throw std::invalid_argument("KernelKind: yukawa m must be > 0");
  return {KernelFamily::yukawa, m};
}

double KernelKind::operator()(double w) const {
  switch (family) {
    case KernelFamily::coulomb:
      return 1.0 / w;
    case KernelFamily::yukawa:
      return std::exp(-m * w) / w;
    case KernelFamily::bp:
      return (1.0 - std::exp(-w)) / w;
    case KernelFamily::pure_exponential:
      return std::exp(-w);
  }
  return 0.0;
}

double self_cell_average(const KernelKind& kernel, double h) {
  const PairRule& rule = pair_rule();
  double s = 0.0;
  for (std::size_t q = 0; q < rule.w.size(); ++q) {
    const auto& t = rule.t[q];
    const double w = h * std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
    s += rule.w[q] * kernel(w);
  }
  return s;
}

Field3D make_field3d(double extent, int n) {
  if (n < 2 || n > kMaxN)
    throw std::invalid_argument("Field3D: n must be in [2, 48]");
  if (!(extent > 0.0)) throw std::invalid_argument("Field3D: extent must be > 0");
  Field3D f;
  f.extent = extent;
  f.n = n;
  f.v.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  return f;
}

Field3D embed_radial(const RadialField& u, double extent, int n) {
  Field3D f = make_field3d(extent, n);
  for (int ix = 0; ix < n; ++ix) {
    const double x = f.coord(ix);
    for (int iy = 0; iy < n; ++iy) {
      const double y = f.coord(iy);
      for (int iz = 0; iz < n; ++iz) {
        const double z = f.coord(iz);
        f.at(ix, iy, iz) = interp_even(u, std::sqrt(x * x + y * y + z * z));
      }
    }
  }
  return f;
}

double mass3d(const Field3D& f) {
  const double h3 = f.h() * f.h() * f.h();
  double s = 0.0;
  for (double x : f.v) s += x * x;
  return s * h3;
}

namespace {

// pairwise sum over cells; rho = f^2 per cell
template <class Body>
double pair_sum(const Field3D& f, Body&& body, double self_avg) {
  const int n = f.n;
  const int nc = n * n * n;
  const double h = f.h();
  const double h6 = std::pow(h, 6);

  std::vector<double> rho(nc);
  std::vector<double> px(nc), py(nc), pz(nc);
  for (int ix = 0, c = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz, ++c) {
        rho[c] = f.v[c] * f.v[c];
        px[c] = f.coord(ix);
        py[c] = f.coord(iy);
        pz[c] = f.coord(iz);
      }

  const int nt = thread_count();
  std::vector<double> partial(nt, 0.0);
#pragma omp parallel num_threads(nt)
  {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
#else
    const int tid = 0;
#endif
    double acc = 0.0;
#pragma omp for schedule(static)
    for (int i = 0; i < nc; ++i) {
      const double ri = rho[i];
      if (ri == 0.0) continue;
      const double xi = px[i], yi = py[i], zi = pz[i];
      double row = 0.0;
      for (int j = i + 1; j < nc; ++j) {
        const double dx = xi - px[j], dy = yi - py[j], dz = zi - pz[j];
        const double w = std::sqrt(dx * dx + dy * dy + dz * dz);
        row += rho[j] * body(w);
      }
      acc += ri * (2.0 * row + ri * self_avg);
    }
    partial[tid] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;  // fixed order: deterministic
  return total * h6;
}

}  // namespace

double brute_force_double(const Field3D& f, const KernelKind& kernel) {
  if (f.n > kMaxN) throw std::invalid_argument("brute_force_double: n > 48");
  const double self_avg = self_cell_average(kernel, f.h());
  return pair_sum(f, [&](double w) { return kernel(w); }, self_avg);
}

namespace ref {
double brute_force_double_serial(const Field3D& f, const KernelKind& kernel) {
  if (f.n > kMaxN) throw std::invalid_argument("brute_force_double: n > 48");
  const int n = f.n;
  const int nc = n * n * n;
  const double h = f.h();
  const double h6 = std::pow(h, 6);
  const double self_avg = self_cell_average(kernel, h);

  std::vector<double> rho(nc), px(nc), py(nc), pz(nc);
  for (int ix = 0, c = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz, ++c) {
        rho[c] = f.v[c] * f.v[c];
        px[c] = f.coord(ix);
        py[c] = f.coord(iy);
        pz[c] = f.coord(iz);
      }
  double total = 0.0;
  for (int i = 0; i < nc; ++i) {
    double row = 0.0;
    for (int j = i + 1; j < nc; ++j) {
      const double dx = px[i] - px[j], dy = py[i] - py[j], dz = pz[i] - pz[j];
      row += rho[j] * kernel(std::sqrt(dx * dx + dy * dy + dz * dz));
    }
    total += rho[i] * (2.0 * row + rho[i] * self_avg);
  }
  return total * h6;
}
}  // namespace ref

BruteForceSet brute_force_all(const Field3D& f) {
  if (f.n > kMaxN) throw std::invalid_argument("brute_force_all: n > 48");
  const int n = f.n;
  const int nc = n * n * n;
  const double h = f.h();
  const double h6 = std::pow(h, 6);

  std::vector<double> rho(nc);
  std::vector<double> px(nc), py(nc), pz(nc);
  for (int ix = 0, c = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz, ++c) {
        rho[c] = f.v[c] * f.v[c];
        px[c] = f.coord(ix);
        py[c] = f.coord(iy);
        pz[c] = f.coord(iz);
      }

  const double self_c = self_cell_average(KernelKind::coulomb(), h);
  const double self_y = self_cell_average(KernelKind::yukawa(1.0), h);
  const double self_e = self_cell_average(KernelKind::pure_exponential(), h);

  const int nt = thread_count();
  std::vector<std::array<double, 3>> partial(nt, {0.0, 0.0, 0.0});
#pragma omp parallel num_threads(nt)
  {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
#else
    const int tid = 0;
#endif
    double ac = 0.0, ay = 0.0, ae = 0.0;
#pragma omp for schedule(static)
    for (int i = 0; i < nc; ++i) {
      const double ri = rho[i];
      const double xi = px[i], yi = py[i], zi = pz[i];
      double rc = 0.0, ry = 0.0, re = 0.0;
      for (int j = i + 1; j < nc; ++j) {
        const double dx = xi - px[j], dy = yi - py[j], dz = zi - pz[j];
        const double w = std::sqrt(dx * dx + dy * dy + dz * dz);
        const double e = std::exp(-w);
        const double rj = rho[j];
        rc += rj / w;
        ry += rj * e / w;
        re += rj * e;
      }
      ac += ri * (2.0 * rc + ri * self_c);
      ay += ri * (2.0 * ry + ri * self_y);
      ae += ri * (2.0 * re + ri * self_e);
    }
    partial[tid] = {ac, ay, ae};
  }
  BruteForceSet out;
  for (const auto& p : partial) {
    out.coulomb += p[0];
    out.yukawa1 += p[1];
    out.pure_exp += p[2];
  }
  out.coulomb *= h6;
  out.yukawa1 *= h6;
  out.pure_exp *= h6;
  out.bp = out.coulomb - out.yukawa1;
  return out;
}

double potential_at(const Field3D& f, const KernelKind& kernel,
                    const std::array<double, 3>& x) {
  const int n = f.n;
  const double h3 = std::pow(f.h(), 3);
  double s = 0.0;
  for (int ix = 0, c = 0; ix < n; ++ix) {
    const double dx = x[0] - f.coord(ix);
    for (int iy = 0; iy < n; ++iy) {
      const double dy = x[1] - f.coord(iy);
      for (int iz = 0; iz < n; ++iz, ++c) {
        const double dz = x[2] - f.coord(iz);
        const double w = std::sqrt(dx * dx + dy * dy + dz * dz);
        s += f.v[c] * f.v[c] * kernel(w);
      }
    }
  }
  return s * h3;
}

double brute_force_cross(const Field3D& f, const Field3D& g,
                         const KernelKind& kernel) {
  if (f.n != g.n || f.extent != g.extent)
    throw std::invalid_argument("brute_force_cross: grid mismatch");
  const int n = f.n;
  const int nc = n * n * n;
  const double h = f.h();
  const double h6 = std::pow(h, 6);
  const double self_avg = self_cell_average(kernel, h);

  std::vector<double> pf(nc), pg(nc);
  std::vector<double> px(nc), py(nc), pz(nc);
  for (int ix = 0, c = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz, ++c) {
        pf[c] = f.v[c] * f.v[c];
        pg[c] = g.v[c] * g.v[c];
        px[c] = f.coord(ix);
        py[c] = f.coord(iy);
        pz[c] = f.coord(iz);
      }
  const int nt = thread_count();
  std::vector<double> partial(nt, 0.0);
#pragma omp parallel num_threads(nt)
  {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
#else
    const int tid = 0;
#endif
    double acc = 0.0;
#pragma omp for schedule(static)
    for (int i = 0; i < nc; ++i) {
      const double xi = px[i], yi = py[i], zi = pz[i];
      double row = 0.0;
      for (int j = 0; j < nc; ++j) {
        if (j == i) continue;
        const double dx = xi - px[j], dy = yi - py[j], dz = zi - pz[j];
        const double w = std::sqrt(dx * dx + dy * dy + dz * dz);
        row += pg[j] * kernel(w);
      }
      acc += pf[i] * (row + pg[i] * self_avg);
    }
    partial[tid] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total * h6;
}

namespace {
double t_functional_3d(const Field3D& f, const ModelParams& params) {
  const double h3 = std::pow(f.h(), 3);
  const double B = brute_force_double(f, KernelKind::bp()) / (4.0 * kPi);
  double C = 0.0, D = 0.0;
  for (double x : f.v) {
    C += std::pow(std::abs(x), params.p);
    const double x2 = x * x;
    D += x2 * x2 * x2;
  }
  C *= h3;
  D *= h3;
  return 0.25 * B - params.mu / params.p * C - D / 6.0;
}
}  // namespace

double splitting_defect(const Field3D& u1, const Field3D& u2,
                        const ModelParams& params) {
  if (u1.n != u2.n || u1.extent != u2.extent)
    throw std::invalid_argument("splitting_defect: grid mismatch");
  Field3D sum = u1;
  for (std::size_t i = 0; i < sum.v.size(); ++i) sum.v[i] += u2.v[i];
  return t_functional_3d(sum, params) - t_functional_3d(u1, params) -
         t_functional_3d(u2, params);
}

}  // namespace bp
