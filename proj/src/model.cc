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
#include <diracvisc/model.h>

namespace diracvisc {

void ModelParams::validate() const {
  if (!(hbar_vf > 0.0)) throw DomainError("hbar_vf must be positive");
  if (!(cutoff_Ec > 0.0)) throw DomainError("cutoff_Ec must be positive");
  if (!(disorder_A > 0.0)) throw DomainError("disorder_A must be positive");
  if (degeneracy < 1) throw DomainError("degeneracy must be >= 1");
  if (!(temperature >= 0.0)) throw DomainError("temperature must be >= 0");
}

double ModelParams::gamma0() const {
  return cutoff_Ec * std::exp(-0.5 * disorder_A);
}

double magnetic_length(double b_field) {
  if (!(b_field > 0.0)) throw DomainError("magnetic field must be positive");
  return std::sqrt(units::hbar_over_e / b_field) * 1e9;
}

double cyclotron_energy(double b_field, const ModelParams& p) {
  return std::sqrt(2.0) * p.hbar_vf / magnetic_length(b_field);
}

LandauSpectrum::LandauSpectrum(double b_field, const ModelParams& p,
                               long hard_cap)
    : b_(b_field),
      lB_(magnetic_length(b_field)),
      wc_(std::sqrt(2.0) * p.hbar_vf / lB_),
      Ec_(p.cutoff_Ec),
      cap_(hard_cap) {
  if (hard_cap < 4) throw DomainError("Landau hard cap too small");
}

long LandauSpectrum::n_cutoff(double E, double Omega) const {
  double thr = std::max(Ec_, 3.0 * (std::abs(E) + std::abs(Omega)));
  double x = thr / wc_;
  long n = static_cast<long>(std::ceil(x * x));
  // guard against rounding in ceil(x^2)
  while (n > 0 && wc_ * std::sqrt(double(n - 1)) >= thr) --n;
  while (wc_ * std::sqrt(double(n)) < thr) ++n;
  return n;
}

long LandauSpectrum::n_explicit(double E, double Omega) const {
  return std::min(n_cutoff(E, Omega), cap_);
}

double LandauSpectrum::energy(long n, int s) const {
  if (n < 0) throw DomainError("negative Landau index");
  if (n == 0) return 0.0;
  return (s > 0 ? 1.0 : -1.0) * wc_ * std::sqrt(double(n));
}

std::vector<LandauLevel> LandauSpectrum::levels(long nmax) const {
  if (nmax < 0) nmax = n_cutoff();
  std::vector<LandauLevel> out;
  out.reserve(2 * nmax + 1);
  for (long n = nmax; n >= 1; --n) out.push_back({n, -1, energy(n, -1)});
  out.push_back({0, +1, 0.0});
  for (long n = 1; n <= nmax; ++n) out.push_back({n, +1, energy(n, +1)});
  return out;
}

double landau_energy(long n, int s, const LandauSpectrum& spec) {
  return spec.energy(n, s);
}

double effective_cyclotron(double E, const LandauSpectrum& spec) {
  if (E == 0.0)
    throw DomainError("effective cyclotron frequency diverges at E = 0");
  double w = spec.hbar_omega_c();
  return w * w / (2.0 * std::abs(E));
}

namespace {
inline double sgn(int s) { return s > 0 ? 1.0 : -1.0; }
}  // namespace

cplx stress_element_xy(LandauState bra, LandauState ket,
                       const LandauSpectrum& spec) {
  const long n = bra.n, np = ket.n;
  if (n < 0 || np < 0) throw DomainError("negative Landau index");
  const double w = spec.hbar_omega_c();
  const cplx I(0.0, 1.0);
  if (n == 0 && np == 0) return 0.0;
  if (n == 0) return np == 2 ? -I * sgn(ket.s) * w / (2.0 * std::sqrt(2.0)) : 0.0;
  if (np == 0) return n == 2 ? I * sgn(bra.s) * w / (2.0 * std::sqrt(2.0)) : 0.0;
  cplx v = 0.0;
  if (n == np + 2) v += I * sgn(bra.s) * std::sqrt(double(n - 1));
  if (n == np - 2) v -= I * sgn(ket.s) * std::sqrt(double(n + 1));
  return 0.25 * w * v;
}

cplx stress_element_xx_minus_yy(LandauState bra, LandauState ket,
                                const LandauSpectrum& spec) {
  const long n = bra.n, np = ket.n;
  if (n < 0 || np < 0) throw DomainError("negative Landau index");
  const double w = spec.hbar_omega_c();
  if (n == 0 && np == 0) return 0.0;
  if (n == 0) return np == 2 ? -sgn(ket.s) * w / std::sqrt(2.0) : 0.0;
  if (np == 0) return n == 2 ? -sgn(bra.s) * w / std::sqrt(2.0) : 0.0;
  double v = 0.0;
  if (np == n - 2) v -= sgn(bra.s) * std::sqrt(double(n - 1));
  if (np == n + 2) v -= sgn(ket.s) * std::sqrt(double(n + 1));
  return 0.5 * w * v;
}

Eigen::Matrix2cd stress_kspace(double k, double theta, StressComponent which,
                               const ModelParams& p) {
  if (k < 0.0) throw DomainError("negative momentum");
  const cplx I(0.0, 1.0);
  Eigen::Matrix2cd sz, sy;
  sz << 1.0, 0.0, 0.0, -1.0;
  sy << 0.0, -I, I, 0.0;
  const double e = p.hbar_vf * k;
  if (which == StressComponent::XY)
    return 0.5 * e * (std::sin(2.0 * theta) * sz - std::cos(2.0 * theta) * sy);
  return e * (std::cos(2.0 * theta) * sz + std::sin(2.0 * theta) * sy);
}

}  // namespace diracvisc
