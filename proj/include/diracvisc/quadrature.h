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
#ifndef DIRACVISC_QUADRATURE_H
#define DIRACVISC_QUADRATURE_H

#include <functional>
#include <vector>

namespace diracvisc {

struct QuadResult {
  double value = 0.0;
  double abserr = 0.0;
};

struct QuadOptions {
  double epsabs = 1e-8;
  double epsrel = 1e-6;
  std::size_t limit = 2000;
  // a failed status is still accepted when the error estimate is below
  // this (0: never)
  double accept_abserr = 0.0;
};

/**
 * \brief Adaptive Gauss-Kronrod (GSL qag/qagp) on [a,b]. Interior break
 * points outside (a,b) are dropped. Throws QuadratureError on failure.
 */
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, const QuadOptions& opt = {},
                     std::vector<double> breakpoints = {});

// (-inf, b] via the GSL qagil transformation
QuadResult integrate_lower_infinite(const std::function<double(double)>& f,
                                    double b, const QuadOptions& opt = {});

}  // namespace diracvisc

#endif
