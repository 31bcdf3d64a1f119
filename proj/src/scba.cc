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

#include <cmath>
#include <diracvisc/errors.h>
#include <diracvisc/scba.h>
#include <string>

namespace diracvisc {

namespace {

constexpr double pi = 3.14159265358979323846;

// Log(-Ec^2/z^2) on the retarded sheet (Im z >= 0, Im z = 0 read as 0+)
cplx log_b0(cplx z, double Ec) {
  double im = z.imag() > 0.0 ? z.imag() : 0.0;
  double arg = std::atan2(im, z.real());
  return cplx(2.0 * std::log(Ec / std::abs(z)), pi - 2.0 * arg);
}

// Log(x - z^2) for real x, retarded sheet
cplx log_shifted_square(double x, cplx z) {
  cplx w = x - z * z;
  if (w.imag() == 0.0) w.imag(z.real() > 0.0 ? -0.0 : 0.0);
  return std::log(w);
}

template <class Rhs, class Deriv>
SelfEnergySolution fixed_point(double E, cplx seed, Rhs&& F, Deriv&& dF,
                               const SolverOptions& opt) {
  SelfEnergySolution sol;
  sol.energy = E;
  cplx s = seed;
  double res = 1.0, prev = INFINITY;
  double alpha = opt.alpha;
  auto residual = [&](cplx x, cplx fx) {
    return std::abs(fx - x) / std::max(std::abs(fx), opt.floor);
  };
  auto done = [&](cplx f, double r, int it) {
    sol.sigma = f.imag() > 0.0 ? std::conj(f) : f;
    sol.residual = r;
    sol.iterations = it;
    sol.converged = true;
    return sol;
  };
  int it = 0;
  while (it < opt.max_iter) {
    ++it;
    cplx f = F(s);
    res = residual(s, f);
    if (res <= opt.tol) return done(f, res, it);
    // damping shrinks while the map oscillates
    if (res > prev) alpha = std::max(0.5 * alpha, 1e-3);
    prev = res;
    if (opt.newton && (res < opt.newton_switch || it % 50 == 0)) {
      // unguarded Newton burst; roots come in conjugate pairs for real E,
      // so the iterate may cross the real axis and is reflected at the end
      cplx x = s;
      for (int k = 0; k < 60 && it < opt.max_iter; ++k) {
        ++it;
        cplx fx = F(x);
        double r = residual(x, fx);
        if (r <= opt.tol) return done(fx, r, it);
        cplx J = dF(x) - 1.0;
        if (std::abs(J) < 1e-300 || !std::isfinite(r)) break;
        x -= (fx - x) / J;
      }
    }
    cplx next = (1.0 - alpha) * s + alpha * f;
    if (next.imag() > 0.0) next = std::conj(next);
    s = next;
  }
  sol.iterations = it;
  sol.sigma = s;
  sol.residual = res;
  sol.converged = false;
  throw ConvergenceError("SCBA did not converge at E = " + std::to_string(E),
                         res, sol.iterations);
}

}  // namespace

cplx scba_rhs_b0(cplx sigma, double E, const ModelParams& p) {
  cplx z = E - sigma;
  if (z == 0.0) throw DomainError("z = 0 in SCBA");
  return -(z / p.disorder_A) * log_b0(z, p.cutoff_Ec);
}

cplx landau_resolvent_sum(cplx z, double E, const LandauSpectrum& spec,
                          cplx* dS, long n_cut) {
  const double w2 = spec.hbar_omega_c() * spec.hbar_omega_c();
  const long nc = n_cut < 0 ? spec.n_cutoff(E) : n_cut;
  const long m = std::min(nc, spec.hard_cap());
  const cplx z2 = z * z;
  cplx s = 1.0 / z;
  cplx ds = -1.0 / z2;
  for (long n = 1; n <= m; ++n) {
    const double c = double(n) * w2;
    const cplx d = 1.0 / (z2 - c);
    s += 2.0 * z * d;
    ds -= 2.0 * (z2 + c) * d * d;
  }
  if (nc > m) {
    const double a = (double(m) + 0.5) * w2;
    const double b = (double(nc) + 0.5) * w2;
    const cplx la = log_shifted_square(a, z), lb = log_shifted_square(b, z);
    s += (2.0 * z / w2) * (la - lb);
    ds += (2.0 / w2) * (la - lb) +
          (2.0 * z / w2) * (-2.0 * z / (a - z2) + 2.0 * z / (b - z2));
  }
  if (dS) *dS = ds;
  return s;
}

cplx scba_rhs_landau(cplx sigma, double E, const ModelParams& p,
                     const LandauSpectrum& spec) {
  const double w = spec.hbar_omega_c();
  return (w * w / (2.0 * p.disorder_A)) *
         landau_resolvent_sum(E - sigma, E, spec);
}

SelfEnergySolution solve_self_energy_b0(double E, const ModelParams& p,
                                        const SolverOptions& opt) {
  p.validate();
  const double A = p.disorder_A;
  cplx seed = opt.seed.value_or(
      cplx(0.0, -std::max(p.gamma0(), pi * std::abs(E) / A)));
  auto F = [&](cplx s) { return scba_rhs_b0(s, E, p); };
  auto dF = [&](cplx s) {
    return (log_b0(E - s, p.cutoff_Ec) - 2.0) / A;
  };
  return fixed_point(E, seed, F, dF, opt);
}

SelfEnergySolution solve_self_energy_landau(double E, const ModelParams& p,
                                            const LandauSpectrum& spec,
                                            const SolverOptions& opt) {
  p.validate();
  const double A = p.disorder_A;
  const double pre = spec.hbar_omega_c() * spec.hbar_omega_c() / (2.0 * A);
  cplx seed = opt.seed.value_or(
      cplx(0.0, -std::max(p.gamma0(), pi * std::abs(E) / A)));
  const long nc = opt.n_cutoff;
  auto F = [&](cplx s) {
    return pre * landau_resolvent_sum(E - s, E, spec, nullptr, nc);
  };
  auto dF = [&](cplx s) {
    cplx ds;
    landau_resolvent_sum(E - s, E, spec, &ds, nc);
    return -pre * ds;
  };
  return fixed_point(E, seed, F, dF, opt);
}

cplx self_energy_b0_asymptotic(double E, const ModelParams& p) {
  return cplx(0.0, -(p.gamma0() + pi * std::abs(E) / p.disorder_A));
}

NearestLevel nearest_level(double E, const LandauSpectrum& spec) {
  const double w = spec.hbar_omega_c();
  const double x = std::abs(E) / w;
  long N = std::lround(x * x);
  // compare neighbours in energy, not in n
  long best = N;
  double bd = std::abs(x - std::sqrt(double(N)));
  for (long c : {N - 1, N + 1}) {
    if (c < 0) continue;
    double d = std::abs(x - std::sqrt(double(c)));
    if (d < bd) {
      bd = d;
      best = c;
    }
  }
  int S = (best == 0 || E >= 0.0) ? +1 : -1;
  return {best, S, (E - spec.energy(best, S)) / (2.0 * w)};
}

cplx self_energy_separated(double E, NearestLevel lvl, const ModelParams& p,
                           const LandauSpectrum& spec) {
  const double w = spec.hbar_omega_c();
  const double eps = (E - spec.energy(lvl.N, lvl.S)) / (2.0 * w);
  const double r = 1.0 / (2.0 * p.disorder_A) - eps * eps;
  if (r < 0.0) throw DomainError("energy lies in a Landau level gap");
  return cplx(w * eps, -w * std::sqrt(r));
}

cplx self_energy_overlapped(double E, const ModelParams& p,
                            const LandauSpectrum& spec) {
  const double w = spec.hbar_omega_c();
  const double g0 = p.gamma0();
  const double A = p.disorder_A;
  double osc = 0.0;
  if (E != 0.0) {
    const double delta = std::exp(-4.0 * pi * pi * E * E / (A * w * w));
    osc = 2.0 * delta * std::cos(pi * E / effective_cyclotron(E, spec));
  }
  return cplx(0.0, -g0 - w * w / (2.0 * g0) -
                       (pi / A) * std::abs(E) * (1.0 + osc));
}

double dos(double E, cplx sigma, const ModelParams& p,
           std::optional<double> b_field) {
  (void)E;
  if (sigma.imag() > 0.0) throw DomainError("advanced self-energy passed to dos");
  const double A = p.disorder_A;
  // both closed forms carry the spin x valley factor 4
  const double g = p.degeneracy / 4.0;
  if (!b_field) {
    return -g * 2.0 * A / (pi * pi * p.hbar_vf * p.hbar_vf) * sigma.imag();
  }
  const double l = magnetic_length(*b_field);
  const double w = cyclotron_energy(*b_field, p);
  return -g * 4.0 * A / (pi * pi * l * l * w * w) * sigma.imag();
}

double relaxation_time(cplx sigma) {
  if (sigma.imag() >= 0.0)
    throw DomainError("relaxation time needs Im Sigma < 0");
  return 1.0 / (2.0 * std::abs(sigma.imag()));
}

}  // namespace diracvisc
