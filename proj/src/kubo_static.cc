/*
 *            Copyright 2025-2026 The diracvisc Development Team
 *
 *      Licensed under the Apache License, Version 2.0 (the "License")
 *
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *              http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include <algorithm>
#include <cmath>
#include <diracvisc/errors.h>
#include <diracvisc/kubo_static.h>
#include <vector>

namespace diracvisc {

namespace {
constexpr double pi = 3.14159265358979323846;

// principal log, branch cut approached from above
cplx log_up(cplx x) {
  if (x.imag() == 0.0) x.imag(0.0);
  return std::log(x);
}

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// 1 / (z - n w^2 / z) for n >= 1, 1/z for n == 0; continuous in n
cplx gl(cplx z, double n, double w2) {
  if (n == 0.0) return 1.0 / z;
  return z / (z * z - n * w2);
}

/*
 * Sum_{n=0}^{nc} term(n). Above the cap the sum is replaced by the
 * midpoint integral over [cap + 1/2, nc + 1/2]; peak is an optional
 * breakpoint (in n) for that integral.
 */
template <class Term>
cplx landau_series(Term&& term, long nc, long cap, double peak = -1.0) {
  const long m = std::min(nc, cap);
  cplx s = 0.0;
  for (long n = 0; n <= m; ++n) s += term(double(n));
  if (nc > m) {
    const double a = m + 0.5, b = nc + 0.5;
    std::vector<double> bp;
    if (peak > a && peak < b) bp.push_back(peak);
    QuadOptions q{1e-300, 1e-9, 4000};
    auto re = integrate([&](double x) { return term(x).real(); }, a, b, q, bp);
    auto im = integrate([&](double x) { return term(x).imag(); }, a, b, q, bp);
    s += cplx(re.value, im.value);
  }
  return s;
}

std::vector<double> peak_breakpoints(double c, double g, double lo,
                                     double hi) {
  std::vector<double> bp;
  for (double k : {0.0, 1.0, 10.0, 100.0}) {
    for (double x : {c - k * g, c + k * g})
      if (x > lo && x < hi) bp.push_back(x);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  return bp;
}

cplx solve_b0(double E, const ModelParams& p) {
  auto sol = solve_self_energy_b0(E, p);
  return sol.sigma;
}

cplx solve_landau(double E, const ModelParams& p, const LandauSpectrum& spec) {
  return solve_self_energy_landau(E, p, spec).sigma;
}
}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::separated:
      return "separated";
    case Regime::overlapped:
      return "overlapped";
    default:
      return "b_zero";
  }
}

cplx radial_trace_integral(cplx z1, cplx z2, double X) {
  const cplx a = z1 * z1, b = z2 * z2;
  const double U = X * X;
  const cplx la = std::log(a - U) - std::log(a);
  if (std::abs(b - a) < 1e-7 * std::abs(a)) {
    return 2.0 * z1 * z2 * (a / (a - U) - 1.0 + la);
  }
  const cplx lb = std::log(b - U) - std::log(b);
  return 2.0 * z1 * z2 / (b - a) * (-a * la + b * lb);
}

ViscosityValue shear_b0_numeric(double E, const ModelParams& p) {
  return shear_b0_numeric(E, solve_b0(E, p), p);
}

ViscosityValue shear_b0_numeric(double E, cplx sigma, const ModelParams& p) {
  p.validate();
  const cplx z = E - sigma;
  const double X = p.cutoff_Ec;
  const double v = p.hbar_vf;
  const double pre = p.degeneracy / (32.0 * pi * pi * v * v);
  auto g = [&](double x) { return 2.0 * z / (z * z - x * x); };

  // tolerances follow the size of each channel
  const double ra0 = std::abs(radial_trace_integral(z, std::conj(z), X));
  const double rr0 = std::abs(radial_trace_integral(z, z, X));
  const auto bp = peak_breakpoints(std::abs(z.real()), std::abs(z.imag()),
                                   0.0, X);
  auto run = [&](auto&& f, double scale) {
    QuadOptions q{1e-11 * std::max(scale, 1e-300), 1e-9, 4000};
    return integrate(f, 0.0, X, q, bp).value;
  };
  ViscosityValue out;
  out.sigma = sigma;
  out.regime = Regime::b_zero;
  out.RA = pre * run([&](double x) { return x * x * x * std::norm(g(x)); }, ra0);
  out.RR = pre * run(
                     [&](double x) {
                       cplx gg = g(x);
                       return x * x * x * (gg * gg).real();
                     },
                     rr0);
  out.value = pre * run(
                        [&](double x) {
                          double im = g(x).imag();
                          return 2.0 * x * x * x * im * im;
                        },
                        ra0);
  return out;
}

double shear_b0_analytic(double E, const ModelParams& p) {
  p.validate();
  const double A = p.disorder_A, v = p.hbar_vf;
  const double gam = pi * std::abs(E) + p.cutoff_Ec * A * std::exp(-A / 2.0);
  return p.degeneracy / 4.0 / (8.0 * pi * pi * v * v) *
         (A * E * E + 3.0 / A * gam * gam);
}

ShearChannels shear_b0_channels_analytic(double E, cplx sigma,
                                         const ModelParams& p) {
  const double rho = dos(E, sigma, p);
  const double tau = relaxation_time(sigma);
  return {E * E * rho * tau / 8.0 + rho / (32.0 * tau), -rho / (16.0 * tau)};
}

ViscosityValue shear_bfield_numeric(double E, const ModelParams& p,
                                    const LandauSpectrum& spec) {
  return shear_bfield_numeric(E, solve_landau(E, p, spec), p, spec);
}

ViscosityValue shear_bfield_numeric(double E, cplx sigma, const ModelParams& p,
                                    const LandauSpectrum& spec) {
  p.validate();
  const cplx z = E - sigma;
  const double w2 = spec.hbar_omega_c() * spec.hbar_omega_c();
  const double l = spec.l_B();
  const double pre = p.degeneracy * w2 / (8.0 * pi * pi * l * l);
  // pairs (n, n+2) with both levels inside the retained spectrum
  const long nc = spec.n_cutoff(E) - 2;
  const double peak = (z * z).real() / w2;

  auto sra = landau_series(
      [&](double n) { return gl(z, n, w2) * std::conj(gl(z, n + 2, w2)) * (n + 1); },
      nc, spec.hard_cap(), peak);
  auto srr = landau_series(
      [&](double n) { return gl(z, n, w2) * gl(z, n + 2, w2) * (n + 1); }, nc,
      spec.hard_cap(), peak);
  auto sii = landau_series(
      [&](double n) {
        return cplx(
            2.0 * (n + 1) * gl(z, n, w2).imag() * gl(z, n + 2, w2).imag(), 0.0);
      },
      nc, spec.hard_cap(), peak);

  ViscosityValue out;
  out.sigma = sigma;
  out.RA = pre * sra.real();
  out.RR = pre * srr.real();
  out.value = pre * sii.real();
  auto r = detect_regime(E, sigma, spec);
  out.regime = r.regime;
  out.low_confidence = r.low_confidence;
  return out;
}

RegimeInfo detect_regime(double E, cplx sigma, const LandauSpectrum& spec) {
  if (E == 0.0) return {Regime::separated, false, INFINITY};
  const double wt = effective_cyclotron(E, spec) * relaxation_time(sigma);
  if (wt > 2.0) return {Regime::separated, false, wt};
  if (wt < 0.5) return {Regime::overlapped, false, wt};
  return {wt > 1.0 ? Regime::separated : Regime::overlapped, true, wt};
}

AnalyticValue shear_bfield_analytic(double E, cplx sigma, const ModelParams& p,
                                    const LandauSpectrum& spec,
                                    std::optional<Regime> regime) {
  p.validate();
  auto info = detect_regime(E, sigma, spec);
  const Regime r = regime.value_or(info.regime);
  const double g = p.degeneracy / 4.0;
  const double l = spec.l_B();
  if (r == Regime::separated) {
    auto lvl = nearest_level(E, spec);
    const double A = p.disorder_A;
    const double N = double(lvl.N);
    const double f = 1.0 - 2.0 * A * lvl.epsilon * lvl.epsilon;
    const double val =
        g * (N * N + (lvl.N == 0 ? 1.0 : 0.0)) / (2.0 * pi * pi * l * l) *
        std::max(f, 0.0);
    return {val, r, regime ? false : info.low_confidence};
  }
  const double rho = dos(E, sigma, p, spec.b_field());
  const double tau = relaxation_time(sigma);
  double val;
  if (E == 0.0) {
    // omega~ tau -> infinity
    val = rho / (32.0 * tau) * 4.0;
  } else {
    const double wt = effective_cyclotron(E, spec) * tau;
    const double den = 1.0 + 4.0 * wt * wt;
    val = E * E * rho * tau / (8.0 * den) +
          rho / (32.0 * tau) * (3.0 + 16.0 * wt * wt) / den;
  }
  return {val, r, regime ? false : info.low_confidence};
}

double shear_bfield_sdh(double E, const ModelParams& p,
                        const LandauSpectrum& spec) {
  p.validate();
  if (E == 0.0) throw DomainError("SdH form needs E != 0");
  const double A = p.disorder_A;
  const double w = spec.hbar_omega_c(), l = spec.l_B();
  const double wt = effective_cyclotron(E, spec);
  const double al = (A / pi) * wt / std::abs(E);
  const double delta = std::exp(-4.0 * pi * pi * E * E / (A * w * w));
  const double q = 1.0 + 4.0 * al * al;
  return p.degeneracy / 4.0 / (4.0 * pi * pi * l * l) * A * E * E / (w * w * q) *
         (1.0 + 4.0 * al * al * delta / q * std::cos(pi * E / wt));
}

double shear_bfield_dirac_point(const ModelParams& p,
                                const LandauSpectrum& spec) {
  p.validate();
  const double A = p.disorder_A, v = p.hbar_vf;
  const double g0 = p.gamma0();
  const double l = spec.l_B();
  const double t = g0 + v * v / (l * l * g0);
  return p.degeneracy / 4.0 * 3.0 * A / (8.0 * pi * pi * v * v) * t * t;
}

namespace {
// Sum over (n+2, s) <- (n, s') of (n+1) kappa_n^2 times the closed-form
// Fermi-sea integral, at continuous n
cplx fermi_sea_pairs(cplx z, double n, double w) {
  const int nlo_states = n == 0.0 ? 1 : 2;
  const double kap2 = n == 0.0 ? 2.0 : 1.0;
  cplx s = 0.0;
  for (int sa : {-1, 1}) {
    const double Ea = sa * w * std::sqrt(n + 2.0);
    const cplx Ga = 1.0 / (z - Ea);
    const cplx La = log_up(z - Ea);
    for (int k = 0; k < nlo_states; ++k) {
      const double Eb = (k == 0 ? 1.0 : -1.0) * w * std::sqrt(n);
      const double D = Ea - Eb;
      const cplx Gb = 1.0 / (z - Eb);
      s += -(Ga + Gb) / D - 2.0 / (D * D) * (La - log_up(z - Eb));
    }
  }
  return (n + 1.0) * kap2 * s;
}
}  // namespace

ViscosityValue hall_static_numeric(double E, const ModelParams& p,
                                   const LandauSpectrum& spec) {
  return hall_static_numeric(E, solve_landau(E, p, spec), p, spec);
}

ViscosityValue hall_static_numeric(double E, cplx sigma, const ModelParams& p,
                                   const LandauSpectrum& spec) {
  p.validate();
  const cplx z = E - sigma;
  const double w = spec.hbar_omega_c(), w2 = w * w;
  const double l = spec.l_B();
  // pairs (n, n+2) with both levels inside the retained spectrum
  const long nc = spec.n_cutoff(E) - 2;
  const double peak = (z * z).real() / w2;

  auto sra = landau_series(
      [&](double n) {
        return cplx((n + 1) * (gl(z, n + 2, w2) * std::conj(gl(z, n, w2))).imag(),
                    0.0);
      },
      nc, spec.hard_cap(), peak);
  auto sea = landau_series([&](double n) { return fermi_sea_pairs(z, n, w); },
                           nc, spec.hard_cap(), peak);

  ViscosityValue out;
  out.sigma = sigma;
  out.RA = -p.degeneracy * w2 / (8.0 * pi * pi * l * l) * sra.real();
  out.RR = 0.0;  // vanishes identically in the Landau basis
  out.II = (cplx(0.0, p.degeneracy * w2 / (32.0 * pi * pi * l * l)) * sea).real();
  out.value = out.RA - out.RR + out.II;
  auto r = detect_regime(E, sigma, spec);
  out.regime = r.regime;
  out.low_confidence = r.low_confidence;
  return out;
}

double hall_fermi_sea_quadrature(double E, const ModelParams& p,
                                 const LandauSpectrum& spec,
                                 const FermiSeaOptions& opt) {
  p.validate();
  const double w = spec.hbar_omega_c(), w2 = w * w;
  const double l = spec.l_B();
  const long nc = spec.n_cutoff(E) - 2;
  const double pre = p.degeneracy * w2 / (32.0 * pi * pi * l * l);

  const double top = w * std::sqrt(double(nc + 2));
  const double lo = -top - 20.0 * std::max(p.gamma0(), w);

  // one spectrum for the whole sea, the one used by the pair sum. The
  // overlapping-level SCBA has several roots; a continuation table keeps
  // every node on the branch connected to the band bottom.
  SolverOptions so;
  so.n_cutoff = nc + 2;
  const double step = w / 200.0;
  const long nt = static_cast<long>(std::ceil((std::max(E, lo) - lo) / step)) + 1;
  std::vector<cplx> table(nt);
  // a real seed would stay on the (unphysical) real solution inside bands
  auto nudge = [&](cplx s) {
    return cplx(s.real(), std::min(s.imag(), -1e-3 * w));
  };
  for (long i = 0; i < nt; ++i) {
    if (i > 0) so.seed = nudge(table[i - 1]);
    table[i] = solve_self_energy_landau(lo + i * step, p, spec, so).sigma;
  }
  auto sigma_at = [&](double x) {
    long i = std::clamp(std::lround((x - lo) / step), 0L, nt - 1);
    SolverOptions o = so;
    o.seed = nudge(table[i]);
    return solve_self_energy_landau(x, p, spec, o).sigma;
  };
  auto integrand = [&](double x) {
    const cplx s0 = sigma_at(x);
    const double h = std::max(opt.dw_rel * std::abs(s0.imag()), opt.dw_min);
    const cplx ds = (sigma_at(x + h) - sigma_at(x - h)) / (2.0 * h);
    const cplx z = x - s0;
    const cplx zp = 1.0 - ds;
    cplx acc = 0.0;
    for (long n = 0; n <= nc; ++n) {
      const double kap2 = n == 0 ? 2.0 : 1.0;
      for (int sa : {-1, 1}) {
        const cplx Ga = 1.0 / (z - spec.energy(n + 2, sa));
        for (int sb : {1, -1}) {
          if (n == 0 && sb < 0) continue;
          const cplx Gb = 1.0 / (z - spec.energy(n, sb));
          // G_a dG_b/dw - G_b dG_a/dw
          acc += double(n + 1) * kap2 * (-zp) * (Ga * Gb * Gb - Gb * Ga * Ga);
        }
      }
    }
    return (cplx(0.0, pre) * acc).real();
  };

  // equal panels of half a cyclotron quantum; plain adaptive GK on each,
  // the band-edge square roots defeat the extrapolating variant
  const long np = std::max(1L, static_cast<long>(std::ceil((E - lo) / (0.5 * w))));
  double v = 0.0;
  for (long i = 0; i < np && E > lo; ++i) {
    const double a = lo + (E - lo) * i / np, b = lo + (E - lo) * (i + 1) / np;
    v += integrate(integrand, a, b, opt.quad).value;
  }
  // below the spectrum z stays real: the tail is checked, not assumed
  v += integrate_lower_infinite(integrand, std::min(lo, E), opt.quad).value;
  return v;
}

long gap_index(double E, const LandauSpectrum& spec) {
  const double x = std::abs(E) / spec.hbar_omega_c();
  long N = static_cast<long>(std::floor(x * x));
  while (N > 0 && std::sqrt(double(N)) > x) --N;
  while (std::sqrt(double(N + 1)) <= x) ++N;
  return N;
}

AnalyticValue hall_static_analytic(double E, cplx sigma, const ModelParams& p,
                                   const LandauSpectrum& spec,
                                   std::optional<Regime> regime) {
  p.validate();
  if (E == 0.0) return {0.0, Regime::separated, false};
  auto info = detect_regime(E, sigma, spec);
  const Regime r = regime.value_or(info.regime);
  const double g = p.degeneracy / 4.0;
  const double l = spec.l_B();
  const double wt = effective_cyclotron(E, spec);
  double rho = 0.0, tau = INFINITY;
  if (sigma.imag() < 0.0) {
    rho = dos(E, sigma, p, spec.b_field());
    tau = relaxation_time(sigma);
  }
  const double x = wt * tau;
  const double den = std::isinf(x) ? INFINITY : 1.0 + 4.0 * x * x;
  double val;
  if (r == Regime::separated) {
    const double N = double(gap_index(E, spec));
    val = sgn(E) * g * (2.0 * N * N + 2.0 * N + 1.0) / (4.0 * pi * l * l);
    if (rho > 0.0) val -= sgn(E) * rho * E * E / (16.0 * wt * den);
  } else {
    val = sgn(E) * rho * wt * tau * tau * E * E / (4.0 * den);
  }
  return {val, r, regime ? false : info.low_confidence};
}

double level_center(long N, int S, const ModelParams& p,
                    const LandauSpectrum& spec) {
  // E - Re Sigma(E) = E_NS; secant iteration from the bare level
  const double En = spec.energy(N, S);
  auto f = [&](double E) { return E - solve_landau(E, p, spec).real() - En; };
  double x0 = En, f0 = f(x0);
  double x1 = En - f0, f1 = f(x1);
  for (int it = 0; it < 60 && std::abs(f1) > 1e-13; ++it) {
    if (f1 == f0) break;
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f(x1);
  }
  if (std::abs(f1) > 1e-9)
    throw ConvergenceError("level centre did not converge", std::abs(f1), 60);
  return x1;
}

}  // namespace diracvisc
