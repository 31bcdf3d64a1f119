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
#ifndef DIRACVISC_ERRORS_H
#define DIRACVISC_ERRORS_H

#include <stdexcept>
#include <string>

namespace diracvisc {

// invalid argument / outside the domain of a formula
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double abserr)
      : std::runtime_error(what), abserr_(abserr) {}
  double abserr() const { return abserr_; }

 private:
  double abserr_;
};

// Landau sum could not be closed below tolerance
class CutoffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diracvisc

#endif
