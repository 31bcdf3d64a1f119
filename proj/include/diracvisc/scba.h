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
#ifndef DIRACVISC_SCBA_H
#define DIRACVISC_SCBA_H

#include <diracvisc/model.h>
#include <optional>

namespace diracvisc {

struct SolverOptions {
  double alpha = 0.3;   // damping
  double tol = 1e-10;   // relative residual
  int max_iter = 10000;
  // switch to Newton once the damped residual drops below this
  double newton_switch = 1e-3;
  bool newton = true;
  double floor = 1e-12;  // eV, residual denominator floor
  // Landau solver only: fixed level cutoff instead of the energy-dependent
  // policy (< 0 means policy)
  long n_cutoff = -1;
  // starting value; default -i max(E_c e^{-A/2}, pi|E|/A)
  std::optional<cplx> seed;
};

struct SelfEnergySolution {
  double energy = 0.0;
  cplx sigma = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// right-hand sides of the two SCBA equations
cplx scba_rhs_b0(cplx sigma, double E, const ModelParams& p);
cplx scba_rhs_landau(cplx sigma, double E, const ModelParams& p,
                     const LandauSpectrum& spec);

/**
 * \brief Sum_{n,s} 1/(z - E_ns) over the Landau spectrum up to the cutoff
 * n_cutoff(E). Levels above the explicit cap are closed by the midpoint
 * integral of the continuum density. dS/dz is returned through dS.
 */
cplx landau_resolvent_sum(cplx z, double E, const LandauSpectrum& spec,
                          cplx* dS = nullptr, long n_cut = -1);

SelfEnergySolution solve_self_energy_b0(double E, const ModelParams& p,
                                        const SolverOptions& opt = {});
SelfEnergySolution solve_self_energy_landau(double E, const ModelParams& p,
                                            const LandauSpectrum& spec,
                                            const SolverOptions& opt = {});

// closed forms (Re Sigma = 0 unless stated)
cplx self_energy_b0_asymptotic(double E, const ModelParams& p);

struct NearestLevel {
  long N;
  int S;
  double epsilon;  // (E - E_NS) / (2 hbar omega_c)
};
NearestLevel nearest_level(double E, const LandauSpectrum& spec);

cplx self_energy_separated(double E, NearestLevel lvl, const ModelParams& p,
                           const LandauSpectrum& spec);
cplx self_energy_overlapped(double E, const ModelParams& p,
                            const LandauSpectrum& spec);

// states per eV nm^2, degeneracy included
double dos(double E, cplx sigma, const ModelParams& p,
           std::optional<double> b_field = std::nullopt);
double relaxation_time(cplx sigma);

// Gamma floor used only where an integrand divides by Im Sigma
constexpr double gamma_min = 1e-6;

}  // namespace diracvisc

#endif
