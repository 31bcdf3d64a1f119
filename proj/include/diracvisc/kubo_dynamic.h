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
#ifndef DIRACVISC_KUBO_DYNAMIC_H
#define DIRACVISC_KUBO_DYNAMIC_H

#include <diracvisc/kubo_static.h>
#include <optional>
#include <vector>

namespace diracvisc {

// Lorentzian half-width floor for delta-like resonances, eV
constexpr double gamma_floor = 1e-4;

enum class TransitionKind { electron_hole, electron_electron, hole_hole };
std::string to_string(TransitionKind k);

struct Transition {
  LandauState from;
  LandauState to;
  double frequency;  // |E_to - E_from|, eV
  double weight;     // n_low + 1
  TransitionKind kind;
};

/**
 * \brief Pauli-allowed |dn| = 2 transitions from occupied (E < E_F) to empty
 * levels with frequency <= Omega_max, sorted by frequency.
 */
std::vector<Transition> transition_table(double E_fermi,
                                         const LandauSpectrum& spec,
                                         double Omega_max);

// B = 0: window integral over w in [E - Omega, E], Sigma solved per node
double shear_dynamic_b0(double E, double Omega, const ModelParams& p);
double shear_dynamic_b0_eh_limit(double Omega, const ModelParams& p);
double shear_dynamic_b0_ee_limit(double E, double Omega, const ModelParams& p);

/**
 * \brief Landau-level dynamic shear. With a broadening the self-energy is
 * the constant -i Gamma and the window integral is done in closed form;
 * without, Sigma comes from the SCBA at every node (|Im Sigma| floored at
 * gamma_floor). temperature > 0 switches to the Fermi-factor weight.
 */
double shear_dynamic_bfield(double E, double Omega, const ModelParams& p,
                            const LandauSpectrum& spec,
                            std::optional<double> broadening = std::nullopt);

// Hall viscosity at finite frequency with constant broadening Gamma
double hall_dynamic(double E, double Omega, const ModelParams& p,
                    const LandauSpectrum& spec, double broadening);
// the same with the occupations pinned at the kink centres
double hall_dynamic_reduced(double E, double Omega, const ModelParams& p,
                            const LandauSpectrum& spec, double broadening);

/**
 * \brief Reduced Hall sum restricted to pairs whose particle-hole mirror
 * is also Pauli-allowed, pair and mirror together. kink_amplitude is the
 * largest single-transition kink height among them at this Omega's
 * resonance, for scale.
 */
struct CounterpartSum {
  double value;
  double kink_amplitude;
  int pairs;
};
CounterpartSum hall_dynamic_counterpart_sum(double E, double Omega,
                                            const ModelParams& p,
                                            const LandauSpectrum& spec,
                                            double broadening);

struct StaticLimitReport {
  double omega;
  Regime regime;
  double shear_static;
  double shear_dynamic;
  double shear_ratio;  // |dynamic - static| / static
  std::optional<double> hall_static;
  std::optional<double> hall_dynamic;
  std::optional<double> hall_ratio;
};
// Hall fields are filled only when E lies in a gap of a separated spectrum
StaticLimitReport static_limit_check(double E, const ModelParams& p,
                                     const LandauSpectrum* spec = nullptr,
                                     double Omega = 1e-3);

}  // namespace diracvisc

#endif
