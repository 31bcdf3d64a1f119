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

#pragma once
#ifndef DIRACVISC_MODEL_H
#define DIRACVISC_MODEL_H

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace diracvisc {

using cplx = std::complex<double>;

namespace units {
// hbar/e in T*m^2
constexpr double hbar_over_e = 1.054571817e-34 / 1.602176634e-19;
constexpr double default_hbar_vf = 0.6582;  // eV nm, v_f = 1e6 m/s
constexpr double default_cutoff = 7.2;      // eV
}  // namespace units

/**
 * \brief Material and disorder parameters. hbar = 1 throughout: energies in
 * eV, lengths in nm, viscosities in hbar/nm^2.
 */
struct ModelParams {
  double hbar_vf = units::default_hbar_vf;
  double cutoff_Ec = units::default_cutoff;
  double disorder_A = 20.0;
  int degeneracy = 4;
  double temperature = 0.0;  // k_B T in eV

  void validate() const;
  double gamma0() const;  // E_c exp(-A/2)
};

struct LandauLevel {
  long n;
  int s;
  double energy;
};

class LandauSpectrum {
 public:
  static constexpr long default_hard_cap = 20000;

  LandauSpectrum(double b_field, const ModelParams& p,
                 long hard_cap = default_hard_cap);

  double b_field() const { return b_; }
  double l_B() const { return lB_; }
  double hbar_omega_c() const { return wc_; }
  long hard_cap() const { return cap_; }

  // smallest n with wc*sqrt(n) >= max(Ec, 3(|E|+|Omega|)); not capped
  long n_cutoff(double E = 0.0, double Omega = 0.0) const;
  // explicit summation limit, min(n_cutoff, hard_cap)
  long n_explicit(double E = 0.0, double Omega = 0.0) const;

  double energy(long n, int s) const;
  // sorted list of levels up to n_cutoff(0,0) (or nmax if given)
  std::vector<LandauLevel> levels(long nmax = -1) const;

 private:
  double b_;
  double lB_;
  double wc_;
  double Ec_;
  long cap_;
};

double magnetic_length(double b_field);
double cyclotron_energy(double b_field, const ModelParams& p);
double landau_energy(long n, int s, const LandauSpectrum& spec);
double effective_cyclotron(double E, const LandauSpectrum& spec);

struct LandauState {
  long n;
  int s;
};

// <n,s|T_xy|n',s'> and <n,s|T_xx - T_yy|n',s'>, eV
cplx stress_element_xy(LandauState bra, LandauState ket,
                       const LandauSpectrum& spec);
cplx stress_element_xx_minus_yy(LandauState bra, LandauState ket,
                                const LandauSpectrum& spec);

enum class StressComponent { XY, XX_minus_YY };

// 2x2 stress matrix in the chiral (k,s) basis
Eigen::Matrix2cd stress_kspace(double k, double theta, StressComponent which,
                               const ModelParams& p);

}  // namespace diracvisc

#endif
