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
#include <diracvisc/kubo_dynamic.h>
#include <tuple>

namespace diracvisc {

namespace {
constexpr double pi = 3.14159265358979323846;

double occupation(double x, double mu, double T) {
  if (T <= 0.0) return x < mu ? 1.0 : (x > mu ? 0.0 : 0.5);
  const double y = (x - mu) / T;
  if (y > 700.0) return 0.0;
  if (y < -700.0) return 1.0;
  return 1.0 / (1.0 + std::exp(y));
}

double kink(double x, double g) { return x / (x * x + g * g); }

cplx gl(cplx z, double n, double w2) {
  if (n == 0.0) return 1.0 / z;
  return z / (z * z - n * w2);
}

// log(1 + x) without cancellation for small |x|
cplx log1p_c(cplx x) {
  if (std::abs(x) > 1e-3) return std::log(1.0 + x);
  cplx t = x, s = 0.0;
  for (int k = 1; k <= 8; ++k) {
    s += (k % 2 ? 1.0 : -1.0) * t / double(k);
    t *= x;
  }
  return s;
}

// antiderivative of 1/((w - p)(w - q)) at w
cplx pole_pair(double w, cplx p, cplx q) {
  if (p == q) return -1.0 / (w - p);
  // same half plane: the ratio never crosses the cut
  if ((p.imag() < 0.0) == (q.imag() < 0.0))
    return log1p_c((q - p) / (w - q)) / (p - q);
  return (std::log(w - p) - std::log(w - q)) / (p - q);
}

// int_lo^hi Im[1/(w - c1 + i g)] Im[1/(w - c2 + i g)] dw
double lorentz_overlap(double c1, double c2, double g, double lo, double hi) {
  const cplx p(c1, -g), q(c2, -g);
  auto F = [&](double w) {
    return 0.5 * (pole_pair(w, p, std::conj(q)) - pole_pair(w, p, q)).real();
  };
  return F(hi) - F(lo);
}

std::vector<double> window_breaks(const LandauSpectrum& spec, long nmax,
                                  double Omega, double lo, double hi) {
  std::vector<double> bp;
  for (long n = 0; n <= nmax; ++n)
    for (int s : {-1, 1}) {
      if (n == 0 && s < 0) continue;
      const double e = spec.energy(n, s);
      for (double x : {e, e - Omega})
        if (x > lo && x < hi) bp.push_back(x);
    }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  return bp;
}

// visit (n, s) -> (n+2, s') pairs, n = 0 once with kappa^2 = 2
template <class Visit>
void for_each_pair(const LandauSpectrum& spec, long nmax, Visit&& visit) {
  for (long n = 0; n <= nmax; ++n) {
    const double kap2 = n == 0 ? 2.0 : 1.0;
    for (int s : {-1, 1}) {
      if (n == 0 && s < 0) continue;
      for (int sp : {-1, 1})
        visit(n, s, sp, double(n + 1) * kap2, spec.energy(n, s),
              spec.energy(n + 2, sp));
    }
  }
}
}  // namespace

std::string to_string(TransitionKind k) {
  switch (k) {
    case TransitionKind::electron_hole:
      return "electron_hole";
    case TransitionKind::electron_electron:
      return "electron_electron";
    default:
      return "hole_hole";
  }
}

std::vector<Transition> transition_table(double E_fermi,
                                         const LandauSpectrum& spec,
                                         double Omega_max) {
  if (!(Omega_max > 0.0)) throw DomainError("Omega_max must be positive");
  std::vector<Transition> out;
  const double w = spec.hbar_omega_c();
  // |E_{n+2} - E_n| >= w (sqrt(n+2) - sqrt(n)) bounds the scan
  long nmax = 2;
  while (w * (std::sqrt(double(nmax + 2)) - std::sqrt(double(nmax))) <=
             Omega_max &&
         w * std::sqrt(double(nmax)) <= std::abs(E_fermi) + Omega_max)
    ++nmax;
  // only levels kept by the band cutoff
  nmax = std::min(nmax, spec.n_cutoff() - 2);
  for_each_pair(spec, nmax, [&](long n, int s, int sp, double, double Eb,
                                double Ea) {
    LandauState lo{n, s}, hi{n + 2, sp};
    double e_from, e_to;
    LandauState from, to;
    if (Eb < E_fermi && Ea > E_fermi) {
      from = lo, to = hi, e_from = Eb, e_to = Ea;
    } else if (Ea < E_fermi && Eb > E_fermi) {
      from = hi, to = lo, e_from = Ea, e_to = Eb;
    } else {
      return;
    }
    const double f = std::abs(e_to - e_from);
    if (f > Omega_max) return;
    TransitionKind kind = TransitionKind::electron_hole;
    if (e_from > 0.0 && e_to > 0.0) kind = TransitionKind::electron_electron;
    if (e_from < 0.0 && e_to < 0.0) kind = TransitionKind::hole_hole;
    out.push_back({from, to, f, double(n + 1), kind});
  });
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.frequency, a.from.n, a.from.s, a.to.n, a.to.s) <
           std::tie(b.frequency, b.from.n, b.from.s, b.to.n, b.to.s);
  });
  return out;
}

double shear_dynamic_b0(double E, double Omega, const ModelParams& p) {
  p.validate();
  if (Omega == 0.0) throw DomainError("Omega = 0: use the static shear");
  const double X = p.cutoff_Ec;
  const double pre =
      p.degeneracy / (32.0 * pi * pi * p.hbar_vf * p.hbar_vf) / Omega;
  auto sig = [&](double w) { return solve_self_energy_b0(w, p).sigma; };
  auto f = [&](double w) {
    const cplx z1 = w + Omega - sig(w + Omega);
    const cplx z2 = w - sig(w);
    return (radial_trace_integral(z1, std::conj(z2), X) -
            radial_trace_integral(z1, z2, X))
        .real();
  };
  const double lo = std::min(E - Omega, E), hi = std::max(E - Omega, E);
  std::vector<double> bp;
  // band touching points of either propagator and the RA degeneracy
  for (double x : {0.0, -Omega, -0.5 * Omega})
    if (x > lo && x < hi) bp.push_back(x);
  const double scale =
      std::max({std::abs(f(lo)), std::abs(f(hi)), std::abs(f(0.5 * (lo + hi)))});
  QuadOptions q{1e-12 * std::max(scale, 1e-300) * (hi - lo), 1e-8, 4000};
  double v = integrate(f, lo, hi, q, bp).value;
  // orientation: the window runs from E - Omega to E
  if (E - Omega > E) v = -v;
  return pre * v;
}

double shear_dynamic_b0_eh_limit(double Omega, const ModelParams& p) {
  p.validate();
  const double v = p.hbar_vf;
  return p.degeneracy / 4.0 * Omega * Omega / (16.0 * v * v) *
         (0.5 + 16.0 / (15.0 * p.disorder_A));
}

double shear_dynamic_b0_ee_limit(double E, double Omega, const ModelParams& p) {
  p.validate();
  const double v = p.hbar_vf, A = p.disorder_A;
  return p.degeneracy / 4.0 * E * E / (2.0 * pi * pi * v * v) *
         (pi * pi / A +
          A * E * E / (A * A / (pi * pi) * Omega * Omega + 4.0 * E * E));
}

double shear_dynamic_bfield(double E, double Omega, const ModelParams& p,
                            const LandauSpectrum& spec,
                            std::optional<double> broadening) {
  p.validate();
  if (Omega == 0.0) throw DomainError("Omega = 0: use the static shear");
  const double w = spec.hbar_omega_c(), w2 = w * w;
  const double l = spec.l_B();
  const long nmax = spec.n_cutoff(E, Omega) - 2;
  const double T = p.temperature;
  const double pre = p.degeneracy * w2 / (32.0 * pi * pi * l * l) / Omega;

  if (broadening && T <= 0.0) {
    const double g = *broadening;
    if (!(g > 0.0)) throw DomainError("broadening must be positive");
    const double lo = E - Omega, hi = E;
    double acc = 0.0;
    for_each_pair(spec, nmax, [&](long, int, int, double wt, double Eb,
                                  double Ea) {
      acc += wt * (lorentz_overlap(Eb - Omega, Ea, g, lo, hi) +
                   lorentz_overlap(Ea - Omega, Eb, g, lo, hi));
    });
    return pre * acc;
  }

  // Sigma per node; kappa-weighted state sums collapse to g_n
  auto sigma = [&](double x) -> cplx {
    cplx s = broadening ? cplx(0.0, -*broadening)
                        : solve_self_energy_landau(x, p, spec).sigma;
    if (s.imag() > -gamma_floor) s.imag(-gamma_floor);
    return s;
  };
  auto window = [&](double x) {
    const cplx zp = x + Omega - sigma(x + Omega);
    const cplx z0 = x - sigma(x);
    double acc = 0.0;
    for (long n = 0; n <= nmax; ++n) {
      const double m = double(n);
      acc += (m + 1.0) * (gl(zp, m, w2).imag() * gl(z0, m + 2, w2).imag() +
                          gl(z0, m, w2).imag() * gl(zp, m + 2, w2).imag());
    }
    return 4.0 * acc;
  };
  double lo, hi;
  std::function<double(double)> f;
  if (T > 0.0) {
    lo = std::min(E, E - Omega) - 40.0 * T;
    hi = std::max(E, E - Omega) + 40.0 * T;
    f = [&](double x) {
      return (occupation(x, E, T) - occupation(x + Omega, E, T)) * window(x);
    };
  } else {
    lo = std::min(E - Omega, E);
    hi = std::max(E - Omega, E);
    f = window;
  }
  auto bp = window_breaks(spec, std::min(nmax + 2, spec.hard_cap()), Omega,
                          lo, hi);
  const double scale = std::max(
      {std::abs(f(lo)), std::abs(f(hi)), std::abs(f(0.5 * (lo + hi)))});
  QuadOptions q{1e-10 * std::max(scale, 1e-300) * (hi - lo), 1e-7, 20000};
  double v = integrate(f, lo, hi, q, bp).value;
  if (T <= 0.0 && Omega < 0.0) v = -v;
  return pre * v;
}

double hall_dynamic(double E, double Omega, const ModelParams& p,
                    const LandauSpectrum& spec, double broadening) {
  p.validate();
  if (Omega == 0.0) throw DomainError("Omega = 0: use the static Hall");
  if (!(broadening > 0.0)) throw DomainError("broadening must be positive");
  const double w = spec.hbar_omega_c(), l = spec.l_B();
  const double T = p.temperature, g = broadening;
  const long nmax = spec.n_cutoff(E, Omega) - 2;
  const double pre = p.degeneracy / 4.0 * w * w / (8.0 * pi * l * l);
  auto f = [&](double x) { return occupation(x, E, T); };
  auto brace = [&](double Eb, double Ea) {
    return 2.0 * (f(Eb + Omega) - f(Eb)) * kink(Omega - Ea + Eb, g) +
           (f(Ea + Omega) - f(Eb - Omega)) * kink(Omega + Ea - Eb, g);
  };
  double acc = 0.0;
  for_each_pair(spec, nmax, [&](long, int, int, double wt, double Eb,
                                double Ea) {
    acc += wt / Omega * (brace(Eb, Ea) - brace(Ea, Eb));
  });
  return pre * acc;
}

namespace {
double reduced_term(double Eb, double Ea, double Omega, double fa, double fb,
                    double g) {
  const double D = Ea - Eb;
  return (fa - fb) * kink(Omega - D, g) - (fb - fa) * kink(Omega + D, g);
}
}  // namespace

double hall_dynamic_reduced(double E, double Omega, const ModelParams& p,
                            const LandauSpectrum& spec, double broadening) {
  p.validate();
  if (Omega == 0.0) throw DomainError("Omega = 0: use the static Hall");
  if (!(broadening > 0.0)) throw DomainError("broadening must be positive");
  const double w = spec.hbar_omega_c(), l = spec.l_B();
  const double T = p.temperature;
  const long nmax = spec.n_cutoff(E, Omega) - 2;
  const double pre = p.degeneracy / 4.0 * w * w / (8.0 * pi * l * l);
  double acc = 0.0;
  for_each_pair(spec, nmax, [&](long, int, int, double wt, double Eb,
                                double Ea) {
    acc += wt / Omega *
           reduced_term(Eb, Ea, Omega, occupation(Ea, E, T),
                        occupation(Eb, E, T), broadening);
  });
  return pre * acc;
}

CounterpartSum hall_dynamic_counterpart_sum(double E, double Omega,
                                            const ModelParams& p,
                                            const LandauSpectrum& spec,
                                            double broadening) {
  p.validate();
  if (Omega == 0.0) throw DomainError("Omega = 0");
  if (!(broadening > 0.0)) throw DomainError("broadening must be positive");
  const double w = spec.hbar_omega_c(), l = spec.l_B();
  const double T = p.temperature, g = broadening;
  const long nmax = spec.n_cutoff(E, Omega) - 2;
  const double pre = p.degeneracy / 4.0 * w * w / (8.0 * pi * l * l);
  auto f = [&](double x) { return occupation(x, E, T); };
  CounterpartSum out{0.0, 0.0, 0};
  for_each_pair(spec, nmax, [&](long n, int s, int sp, double wt, double Eb,
                                double Ea) {
    if (sp < 0) return;  // each {pair, mirror} once
    const double Eb2 = spec.energy(n, n == 0 ? s : -s);
    const double Ea2 = spec.energy(n + 2, -sp);
    if (f(Ea) == f(Eb) || f(Ea2) == f(Eb2)) return;
    const double t1 = reduced_term(Eb, Ea, Omega, f(Ea), f(Eb), g);
    const double t2 = reduced_term(Eb2, Ea2, Omega, f(Ea2), f(Eb2), g);
    out.value += pre * wt / Omega * (t1 + t2);
    // kink height of one member at its own centre
    const double amp = pre * wt / std::abs(Ea - Eb) / (2.0 * g);
    out.kink_amplitude = std::max(out.kink_amplitude, amp);
    ++out.pairs;
  });
  return out;
}

StaticLimitReport static_limit_check(double E, const ModelParams& p,
                                     const LandauSpectrum* spec,
                                     double Omega) {
  StaticLimitReport r{};
  r.omega = Omega;
  if (!spec) {
    r.regime = Regime::b_zero;
    r.shear_static = shear_b0_numeric(E, p).value;
    r.shear_dynamic = shear_dynamic_b0(E, Omega, p);
  } else {
    const cplx sig = solve_self_energy_landau(E, p, *spec).sigma;
    auto sv = shear_bfield_numeric(E, sig, p, *spec);
    r.regime = sv.regime;
    r.shear_static = sv.value;
    r.shear_dynamic = shear_dynamic_bfield(E, Omega, p, *spec);
    // the constant-broadening Hall sum has a static limit only in gaps
    if (sv.regime == Regime::separated &&
        std::abs(sig.imag()) <= gamma_floor) {
      r.hall_static = hall_static_numeric(E, sig, p, *spec).value;
      r.hall_dynamic = hall_dynamic(E, Omega, p, *spec, gamma_floor);
      r.hall_ratio = std::abs(*r.hall_dynamic - *r.hall_static) /
                     std::abs(*r.hall_static);
    }
  }
  r.shear_ratio =
      std::abs(r.shear_dynamic - r.shear_static) / std::abs(r.shear_static);
  return r;
}

}  // namespace diracvisc
