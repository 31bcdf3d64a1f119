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
#ifndef DIRACVISC_SWEEP_H
#define DIRACVISC_SWEEP_H

#include <diracvisc/model.h>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace diracvisc {

enum class Quantity {
  self_energy,
  dos,
  static_shear,
  static_hall,
  dynamic_shear,
  dynamic_hall,
  vertex_check
};
std::string to_string(Quantity q);

// library version string
const char* version();
Quantity quantity_from_string(const std::string& s);

struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  bool log = false;
  std::vector<double> list;  // explicit values; overrides the range

  std::vector<double> values() const;
  // equal when they sample the same points
  bool operator==(const Grid&) const;
};

struct SweepSpec {
  Quantity quantity = Quantity::static_shear;
  Grid E;
  Grid B;      // T; a single 0 means no field
  Grid Omega;  // eV; dynamic quantities only
  std::vector<double> A{20.0};
  // fixed parameters
  double hbar_vf = units::default_hbar_vf;
  double cutoff_Ec = units::default_cutoff;
  int degeneracy = 4;
  double temperature = 0.0;
  // constant broadening (eV) for Landau dynamics; unset: SCBA / |Im Sigma|
  std::optional<double> broadening;
  int angular_nodes = 64;
  std::string output_path;
  std::string format = "csv";
  int threads = 0;  // 0: auto

  // throws DomainError naming the offending field
  void validate() const;
  ModelParams params(double A) const;
  bool operator==(const SweepSpec&) const = default;
};

struct SweepRow {
  double A, B, E, Omega;
  double value;
  double ch1, ch2, ch3;  // quantity-specific channels, NaN if unused
  std::string regime;
  bool converged;
  std::string message;
};

struct SweepResult {
  std::string header;  // resolved config as JSON
  std::vector<SweepRow> rows;
  bool all_converged() const;
};

// channel labels (with units) for the quantity, value first
std::vector<std::string> column_labels(Quantity q);

std::string spec_to_json(const SweepSpec& s);
SweepSpec spec_from_json(const std::string& text);

SweepSpec figure_preset(const std::string& name);
const std::vector<std::string>& figure_names();

// OpenMP over grid points, gathered by index; threads <= 0 means auto
SweepResult run_sweep(const SweepSpec& s);
// same points, one at a time
SweepResult run_sweep_serial(const SweepSpec& s);

void write_csv(const SweepResult& r, const SweepSpec& s, std::ostream& os);
// timestamp: ISO-8601 text placed in the JSON header only
void write_json(const SweepResult& r, const SweepSpec& s, std::ostream& os,
                const std::string& timestamp);
// one polyline per series; x = Omega for dynamic quantities, else E
void write_svg(const SweepResult& r, const SweepSpec& s, std::ostream& os);

}  // namespace diracvisc

#endif
