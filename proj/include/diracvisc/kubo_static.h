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
#ifndef DIRACVISC_KUBO_STATIC_H
#define DIRACVISC_KUBO_STATIC_H

#include <diracvisc/model.h>
#include <diracvisc/quadrature.h>
#include <diracvisc/scba.h>
#include <optional>
#include <string>

namespace diracvisc {

enum class Regime { separated, overlapped, b_zero };
std::string to_string(Regime r);

/**
 * \brief A viscosity with its Kubo channels. value = RA - RR (+ II).
 */
struct ViscosityValue {
  double value = 0.0;
  double RA = 0.0;
  double RR = 0.0;
  double II = 0.0;
  Regime regime = Regime::b_zero;
  bool low_confidence = false;
  cplx sigma = 0.0;  // self-energy at the Fermi energy
};

/**
 * \brief Integral_0^X dx x^3 g1(x) g2(x), g_i = 2 z_i / (z_i^2 - x^2), in
 * closed form (partial fractions in x^2). Both z_i may sit in either half
 * plane.
 */
cplx radial_trace_integral(cplx z1, cplx z2, double X);

// B = 0, adaptive Gauss-Kronrod in k
ViscosityValue shear_b0_numeric(double E, const ModelParams& p);
ViscosityValue shear_b0_numeric(double E, cplx sigma, const ModelParams& p);

// closed-form limits (Re Sigma -> 0)
double shear_b0_analytic(double E, const ModelParams& p);
struct ShearChannels {
  double RA;
  double RR;
};
ShearChannels shear_b0_channels_analytic(double E, cplx sigma,
                                         const ModelParams& p);

// Landau basis
ViscosityValue shear_bfield_numeric(double E, const ModelParams& p,
                                    const LandauSpectrum& spec);
ViscosityValue shear_bfield_numeric(double E, cplx sigma, const ModelParams& p,
                                    const LandauSpectrum& spec);

/**
 * \brief omega_c~ tau at E from the supplied self-energy; separated iff
 * > 2, overlapped iff < 0.5, otherwise the nearer one with low confidence.
 */
struct RegimeInfo {
  Regime regime;
  bool low_confidence;
  double wtau;
};
RegimeInfo detect_regime(double E, cplx sigma, const LandauSpectrum& spec);

struct AnalyticValue {
  double value;
  Regime regime;
  bool low_confidence;
};
// dispatch between the separated and overlapped closed forms; sigma feeds
// rho and tau
AnalyticValue shear_bfield_analytic(double E, cplx sigma, const ModelParams& p,
                                    const LandauSpectrum& spec,
                                    std::optional<Regime> regime = std::nullopt);
// evaluated overlapped forms: Shubnikov-de Haas branch and Dirac-point branch
double shear_bfield_sdh(double E, const ModelParams& p,
                        const LandauSpectrum& spec);
double shear_bfield_dirac_point(const ModelParams& p,
                                const LandauSpectrum& spec);

/**
 * \brief Static Hall viscosity. Channels I,RA and I,RR are Landau sums at
 * the Fermi energy; the Fermi-sea channel II is integrated over (-inf, E]
 * in closed form along the SCBA trajectory z(w) = w - Sigma(w).
 */
ViscosityValue hall_static_numeric(double E, const ModelParams& p,
                                   const LandauSpectrum& spec);
ViscosityValue hall_static_numeric(double E, cplx sigma, const ModelParams& p,
                                   const LandauSpectrum& spec);

/**
 * \brief Fermi-sea channel by direct quadrature along the SCBA trajectory,
 * dSigma/dw by central differences. Slow; kept as an independent route.
 * Needs separated levels up to the cutoff: where bands overlap the SCBA
 * has several roots and the trajectory may switch between them.
 */
struct FermiSeaOptions {
  QuadOptions quad{1e-12, 1e-7, 20000};
  double dw_rel = 1e-3;  // step relative to |Im Sigma|
  double dw_min = 1e-7;  // eV
};
double hall_fermi_sea_quadrature(double E, const ModelParams& p,
                                 const LandauSpectrum& spec,
                                 const FermiSeaOptions& opt = {});

AnalyticValue hall_static_analytic(double E, cplx sigma, const ModelParams& p,
                                   const LandauSpectrum& spec,
                                   std::optional<Regime> regime = std::nullopt);

// highest fully occupied level index for E in a gap (E > 0 convention)
long gap_index(double E, const LandauSpectrum& spec);

// E with E - Re Sigma(E) = E_NS: centre of the broadened level
double level_center(long N, int S, const ModelParams& p,
                    const LandauSpectrum& spec);

}  // namespace diracvisc

#endif
