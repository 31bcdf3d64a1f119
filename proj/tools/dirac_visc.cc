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
// dirac_visc: sweeps, figure presets and checks from the command line.
//
// Exit codes: 0 success, 1 compute error or invalid input, 2 I/O error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <diracvisc/errors.h>
#include <diracvisc/kubo_dynamic.h>
#include <diracvisc/kubo_static.h>
#include <diracvisc/scba.h>
#include <diracvisc/sweep.h>
#include <diracvisc/vertex.h>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace diracvisc;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// --threads beats the config, the config beats DIRAC_VISC_THREADS
int resolve_threads(std::optional<int> flag, int config) {
  if (flag) return *flag;
  if (config > 0) return config;
  if (const char* e = std::getenv("DIRAC_VISC_THREADS")) {
    try {
      return std::stoi(e);
    } catch (...) {
      throw DomainError(std::string("DIRAC_VISC_THREADS: not an integer: ") + e);
    }
  }
  return 0;
}

struct OutputOpts {
  std::string out;
  std::string format;
  std::string svg;
  std::optional<int> threads;
};

void add_output_opts(CLI::App* app, OutputOpts& o) {
  app->add_option("-o,--out", o.out, "output file (default: stdout)");
  app->add_option("-f,--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--svg", o.svg, "also write a line plot to this file");
  app->add_option("-j,--threads", o.threads, "worker threads, 0 = auto")
      ->check(CLI::NonNegativeNumber);
}

int run_and_write(SweepSpec s, const OutputOpts& o) {
  if (!o.out.empty()) s.output_path = o.out;
  if (!o.format.empty()) s.format = o.format;
  s.threads = resolve_threads(o.threads, s.threads);
  s.validate();
  const auto r = run_sweep(s);

  auto emit = [&](std::ostream& os) {
    if (s.format == "json")
      write_json(r, s, os, utc_now());
    else
      write_csv(r, s, os);
  };
  if (s.output_path.empty()) {
    emit(std::cout);
  } else {
    std::ofstream f(s.output_path);
    if (!f) throw IoError("cannot write " + s.output_path);
    emit(f);
    if (!f) throw IoError("write failed: " + s.output_path);
  }
  if (!o.svg.empty()) {
    std::ofstream f(o.svg);
    if (!f) throw IoError("cannot write " + o.svg);
    write_svg(r, s, f);
  }
  if (!r.all_converged()) {
    std::size_t bad = 0;
    for (const auto& row : r.rows) bad += !row.converged;
    std::cerr << "warning: " << bad << " of " << r.rows.size()
              << " points did not converge (flagged in the output)\n";
  }
  return 0;
}

// numeric vs closed form; one line per check
int validate_suite() {
  struct Row {
    std::string name;
    double got, want, tol;
  };
  std::vector<Row> rows;
  auto add = [&](std::string n, double g, double w, double t) {
    rows.push_back({std::move(n), g, w, t});
  };
  for (double A : {100.0, 500.0}) {
    ModelParams p;
    p.disorder_A = A;
    for (double E : {0.5, 1.0, 1.5, 2.0})
      add("B=0 shear A=" + std::to_string(int(A)) + " E=" + std::to_string(E).substr(0, 3),
          shear_b0_numeric(E, p).value, shear_b0_analytic(E, p), 0.07);
  }
  {
    ModelParams p;
    p.disorder_A = 500;
    LandauSpectrum sp(10.0, p);
    for (long N = 0; N <= 3; ++N) {
      const double E = 0.5 * (sp.energy(N, 1) + sp.energy(N + 1, 1));
      const cplx s = solve_self_energy_landau(E, p, sp).sigma;
      add("Hall plateau N=" + std::to_string(N), hall_static_numeric(E, s, p, sp).value,
          hall_static_analytic(E, s, p, sp).value, 0.02);
    }
    for (long N = 0; N <= 3; ++N) {
      const double E = level_center(N, 1, p, sp);
      const cplx s = solve_self_energy_landau(E, p, sp).sigma;
      add("shear level centre N=" + std::to_string(N),
          shear_bfield_numeric(E, s, p, sp).value,
          shear_bfield_analytic(E, s, p, sp, Regime::separated).value, 0.05);
    }
  }
  {
    ModelParams p;
    p.disorder_A = 20;
    add("e-h limit E=0 W=1 A=20", shear_dynamic_b0(0.0, 1.0, p),
        shear_dynamic_b0_eh_limit(1.0, p), 0.15);
    add("static limit E=1.5 A=20", shear_dynamic_b0(1.5, 1e-3, p),
        shear_b0_numeric(1.5, p).value, 0.02);
    const auto v = vertex_correction_b0(1.0, p);
    add("vertex ratio B=0 (abs)", v.ratio, 0.0, 1e-8);
  }
  int failed = 0;
  std::printf("%-28s %14s %14s %10s  %s\n", "check", "numeric", "closed form",
              "rel dev", "result");
  for (const auto& r : rows) {
    const double dev = r.want == 0.0 ? std::abs(r.got)
                                     : std::abs(r.got - r.want) / std::abs(r.want);
    const bool ok = dev <= r.tol;
    failed += !ok;
    std::printf("%-28s %14.6e %14.6e %10.3e  %s\n", r.name.c_str(), r.got, r.want,
                dev, ok ? "PASS" : "FAIL");
  }
  std::printf("%zu checks, %d failed\n", rows.size(), failed);
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static and dynamic shear/Hall viscosity of disordered graphene"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  // solve-sigma
  double E = 0.0, B = 0.0, A = 20.0;
  ModelParams base;
  auto* solve = app.add_subcommand("solve-sigma", "self-energy, DOS and lifetime at one point");
  solve->add_option("-E,--energy", E, "energy (eV)")->required();
  solve->add_option("-B,--field", B, "magnetic field (T), 0 for none")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("-A,--disorder", A, "disorder strength A");
  solve->add_option("--vf", base.hbar_vf, "hbar v_F (eV nm)");
  solve->add_option("--cutoff", base.cutoff_Ec, "band cutoff E_c (eV)");

  // sweep
  std::string config;
  OutputOpts sweep_out;
  auto* sweep = app.add_subcommand("sweep", "parameter sweep from a JSON config");
  sweep->add_option("config", config, "JSON config file")->required();
  add_output_opts(sweep, sweep_out);

  // figure
  std::string fig;
  OutputOpts fig_out;
  auto* figure = app.add_subcommand("figure", "run a figure preset");
  figure->add_option("name", fig, "one of: fig1 fig2a fig2b fig3 fig4 fig5")->required();
  add_output_opts(figure, fig_out);
  bool print_only = false;
  figure->add_flag("--print-config", print_only, "print the preset config and exit");

  // vertex-check
  int nodes = 64;
  auto* vtx = app.add_subcommand("vertex-check", "first-order vertex correction norms");
  vtx->add_option("-E,--energy", E, "energy (eV)")->required();
  vtx->add_option("-A,--disorder", A, "disorder strength A");
  vtx->add_option("-B,--field", B, "magnetic field (T); > 0 uses the Landau basis")
      ->check(CLI::NonNegativeNumber);
  vtx->add_option("--nodes", nodes, "angular nodes (B = 0)")->check(CLI::Range(8, 1 << 20));

  auto* val = app.add_subcommand("validate", "numeric vs closed-form table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*solve) {
      base.disorder_A = A;
      base.validate();
      SelfEnergySolution s;
      double rho;
      if (B > 0.0) {
        LandauSpectrum sp(B, base);
        s = solve_self_energy_landau(E, base, sp);
        rho = dos(E, s.sigma, base, B);
      } else {
        s = solve_self_energy_b0(E, base);
        rho = dos(E, s.sigma, base);
      }
      std::printf("E = %.10g eV  B = %g T  A = %g\n", E, B, A);
      std::printf("Sigma = %.12e %+.12e i eV\n", s.sigma.real(), s.sigma.imag());
      std::printf("DOS = %.10e /(eV nm^2)\n", rho);
      std::printf("tau = %.10e hbar/eV\n", relaxation_time(s.sigma));
      std::printf("iterations = %d  residual = %.3e  converged = %s\n", s.iterations,
                  s.residual, s.converged ? "yes" : "no");
      return s.converged ? 0 : 1;
    }
    if (*sweep) return run_and_write(spec_from_json(read_file(config)), sweep_out);
    if (*figure) {
      const auto s = figure_preset(fig);
      if (print_only) {
        std::cout << spec_to_json(s) << "\n";
        return 0;
      }
      return run_and_write(s, fig_out);
    }
    if (*vtx) {
      ModelParams p = base;
      p.disorder_A = A;
      const auto r = B > 0.0 ? vertex_correction_landau(E, p, LandauSpectrum(B, p))
                             : vertex_correction_b0(E, p, nodes);
      std::printf("basis = %s\n|T| = %.6e eV\n|dT| = %.6e eV\nratio = %.3e\n",
                  to_string(r.basis).c_str(), r.norm_bare, r.norm_correction, r.ratio);
      return 0;
    }
    if (*val) return validate_suite();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
