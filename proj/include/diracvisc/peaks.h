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
#ifndef DIRACVISC_PEAKS_H
#define DIRACVISC_PEAKS_H

#include <vector>

namespace diracvisc {

struct Peak {
  double x;           // parabola-refined position
  double height;      // parabola-refined value
  double prominence;  // topographic, relative to the sampled data
};

/**
 * \brief Local maxima of y(x) on an increasing grid whose prominence is at
 * least min_prominence, largest first after suppressing any peak closer than
 * min_separation to a larger one. Returned sorted by position.
 */
std::vector<Peak> find_peaks(const std::vector<double>& x,
                             const std::vector<double>& y,
                             double min_prominence,
                             double min_separation = 0.0);

// |dy/dx| by central differences (one-sided at the ends)
std::vector<double> abs_derivative(const std::vector<double>& x,
                                   const std::vector<double>& y);

}  // namespace diracvisc

#endif
