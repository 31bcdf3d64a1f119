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
#ifndef DIRACVISC_VERTEX_H
#define DIRACVISC_VERTEX_H

#include <diracvisc/model.h>
#include <string>

namespace diracvisc {

enum class VertexBasis { momentum, landau };
std::string to_string(VertexBasis b);

struct VertexReport {
  VertexBasis basis;
  double norm_bare;        // eV
  double norm_correction;  // eV
  double ratio;
};

/**
 * \brief First-order ladder term of the T_xy vertex for short-range
 * disorder, R-A channel, at the reference momentum |z|/v on a fixed
 * direction. Angular integral by the periodic trapezoid rule, radial by
 * adaptive Gauss-Kronrod up to E_c/v. Frobenius norms of the 2x2 matrices.
 */
VertexReport vertex_correction_b0(double E, const ModelParams& p,
                                  int angular_nodes = 64);

/**
 * \brief Same term in the Landau basis, assembled over all external and
 * internal levels of the active window n <= N(E) + 4. The overlap factors
 * pair n'' with n''' or n''' +- 1, where T_xy has no weight.
 */
VertexReport vertex_correction_landau(double E, const ModelParams& p,
                                      const LandauSpectrum& spec);

}  // namespace diracvisc

#endif
