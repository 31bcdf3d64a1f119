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
// Acceptance runner: one line per criterion, non-zero exit if any fails.

#include "oracles.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <diracvisc/kubo_dynamic.h>
#include <diracvisc/kubo_static.h>
#include <diracvisc/peaks.h>
#include <diracvisc/scba.h>
#include <diracvisc/sweep.h>
#include <diracvisc/vertex.h>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace diracvisc;

namespace {

const double pi = 3.14159265358979323846;

struct Outcome {
  bool pass;
  std::string detail;
};

ModelParams with_A(double A) {
  ModelParams p;
  p.disorder_A = A;
  return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<double> grid(double a, double b, double h) {
  std::vector<double> x;
  for (long i = 0; a + i * h <= b + 1e-12; ++i) x.push_back(a + i * h);
  return x;
}

// root of f on [a, b] by bisection; f(a) f(b) < 0
double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 60; ++i) {
    const double m = 0.5 * (a + b), fm = f(m);
    if (fa * fm <= 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double gap_mid(long N, const LandauSpectrum& sp) {
  return 0.5 * (sp.energy(N, 1) + sp.energy(N + 1, 1));
}

Outcome c1() {
  const auto p = with_A(500);
  LandauSpectrum sp(10.0, p);
  double worst = 0.0;
  for (long N = 0; N <= 3; ++N)
    for (int sgn : {1, -1}) {
      const double E = sgn * gap_mid(N, sp);
      const double ref = sgn * oracle::hall_plateau(N, 10.0);
      worst = std::max(worst, rel(hall_static_numeric(E, p, sp).value, ref));
    }
  const double h0 = hall_static_numeric(gap_mid(0, sp), p, sp).value;
  const bool ok = worst <= 0.02 && rel(h0, 1.209e-3) <= 0.02;
  return {ok, "max rel dev " + fmt("%.2e", worst) + ", N=0 " + fmt("%.4e", h0)};
}

Outcome c2() {
  const auto p = with_A(500);
  LandauSpectrum sp(10.0, p);
  const double l = sp.l_B();
  std::string d;
  bool ok = true;
  for (long N = 0; N <= 3; ++N) {
    const double E = level_center(N, 1, p, sp);
    const double ref = (double(N * N) + (N == 0 ? 1.0 : 0.0)) / (2.0 * pi * pi * l * l);
    const double v = shear_bfield_numeric(E, p, sp).value;
    ok = ok && rel(v, ref) <= 0.05;
    d += "N=" + std::to_string(N) + " " + fmt("%.3f", v / ref) + " ";
  }
  return {ok, "numeric/expected: " + d};
}

Outcome c3() {
  double worst = 0.0, wA = 0, wE = 0;
  for (double A : {10.0, 20.0, 35.0}) {
    const auto p = with_A(A);
    for (int i = 0; i < 20; ++i) {
      const double E = 2.0 * i / 19.0;
      const double r = rel(shear_b0_numeric(E, p).value, shear_b0_analytic(E, p));
      if (r > worst) worst = r, wA = A, wE = E;
    }
  }
  return {worst <= 0.07, "max rel dev " + fmt("%.3f", worst) + " at A=" +
                             fmt("%g", wA) + ", E=" + fmt("%.3f", wE)};
}

Outcome c4() {
  const std::vector<double> As{5, 10, 20, 35};
  bool dec = true;
  double prev = 1e300;
  for (double A : As) {
    const double v = shear_b0_numeric(0.0, with_A(A)).value;
    dec = dec && v < prev;
    prev = v;
  }
  // largest crossing of adjacent curves on (0, 2]
  double boundary = 0.0;
  for (std::size_t i = 1; i < As.size(); ++i) {
    const auto a = with_A(As[i - 1]), b = with_A(As[i]);
    auto f = [&](double E) {
      return shear_b0_numeric(E, a).value - shear_b0_numeric(E, b).value;
    };
    const auto x = grid(0.05, 2.0, 0.05);
    for (std::size_t k = x.size() - 1; k > 0; --k)
      if (f(x[k - 1]) * f(x[k]) < 0.0) {
        boundary = std::max(boundary, bisect(f, x[k - 1], x[k]));
        break;
      }
  }
  const bool ok = dec && std::abs(boundary - 1.1) <= 0.3;
  return {ok, std::string("E=0 decreasing in A: ") + (dec ? "yes" : "no") +
                  ", inversion boundary |E| = " + fmt("%.3f", boundary) + " eV"};
}

Outcome c5() {
  const auto p = with_A(15);
  bool ok = true;
  double prev = 0.0;
  std::string d;
  for (double B : {0.1, 0.5, 1.0, 1.5}) {
    const double v = shear_bfield_numeric(0.0, p, LandauSpectrum(B, p)).value;
    ok = ok && v > prev;
    prev = v;
    d += fmt("%.4e ", v);
  }
  return {ok, "eta_s(E=0) = " + d};
}

Outcome c6() {
  const auto p = with_A(500);
  LandauSpectrum sp(10.0, p);
  const double g = sp.hbar_omega_c() / 50.0;
  const double tol = std::max(g, 0.01);
  const double t1 = sp.energy(3, 1) - sp.energy(1, 1);
  const double t0 = sp.energy(2, 1) - sp.energy(0, 1);
  const double t2 = sp.energy(3, 1) + sp.energy(1, 1);
  bool ok = true;
  std::ostringstream d;
  auto within = [&](const std::vector<double>& got, std::vector<double> want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
      if (std::abs(got[i] - want[i]) > tol) return false;
    return true;
  };
  const auto x = grid(0.02, 0.34, 5e-4);
  for (double EF : {0.05, 0.13}) {
    std::vector<double> ys, yh;
    for (double w : x) {
      ys.push_back(shear_dynamic_bfield(EF, w, p, sp, g));
      yh.push_back(hall_dynamic_reduced(EF, w, p, sp, g));
    }
    const double ms = *std::max_element(ys.begin(), ys.end());
    std::vector<double> ps;
    for (const auto& k : find_peaks(x, ys, 0.05 * ms, 2.0 * g)) ps.push_back(k.x);
    const auto dh = abs_derivative(x, yh);
    const double mh = *std::max_element(dh.begin(), dh.end());
    std::vector<double> ks;
    for (const auto& k : find_peaks(x, dh, 0.05 * mh, 2.0 * g)) ks.push_back(k.x);
    const std::vector<double> ws = EF < 0.1 ? std::vector<double>{t0, t2}
                                            : std::vector<double>{t1, t0, t2};
    const std::vector<double> wk = EF < 0.1 ? std::vector<double>{t0} : ws;
    ok = ok && within(ps, ws) && within(ks, wk);
    d << "E_F=" << EF << " peaks";
    for (double v : ps) d << ' ' << fmt("%.4f", v);
    d << " kinks";
    for (double v : ks) d << ' ' << fmt("%.4f", v);
    d << "; ";
  }
  auto peak = [&](double EF) {
    double m = 0.0;
    for (double w : grid(t2 - 5 * g, t2 + 5 * g, g / 20))
      m = std::max(m, shear_dynamic_bfield(EF, w, p, sp, g));
    return m;
  };
  const double ratio = peak(0.05) / peak(0.13);
  ok = ok && std::abs(ratio - 2.0) <= 0.2;
  d << "height ratio " << fmt("%.3f", ratio);
  return {ok, d.str()};
}

Outcome c7() {
  const auto p = with_A(20);
  std::vector<double> lx, ly;
  for (double w : grid(0.3, 1.0, 0.05)) {
    lx.push_back(std::log(w));
    ly.push_back(std::log(shear_dynamic_b0(0.0, w, p)));
  }
  const double s = slope(lx, ly);
  const double W = 1.0;
  const double r_num = shear_dynamic_b0(0.0, W, with_A(10)) /
                       shear_dynamic_b0(0.0, W, with_A(40));
  const double r_ref = (0.5 + 16.0 / 150.0) / (0.5 + 16.0 / 600.0);
  const bool ok = std::abs(s - 2.0) <= 0.15 && rel(r_num, r_ref) <= 0.10;
  return {ok, "fitted power " + fmt("%.3f", s) + ", A=10/A=40 ratio " +
                  fmt("%.3f", r_num) + " vs " + fmt("%.3f", r_ref)};
}

Outcome c8() {
  const auto a = with_A(10), b = with_A(20);
  auto f = [&](double w) {
    return shear_dynamic_b0(1.5, w, a) - shear_dynamic_b0(1.5, w, b);
  };
  const double w = bisect(f, 0.05, 1.0);
  return {std::abs(w - 0.4) <= 0.1, "crossing at " + fmt("%.4f", w) + " eV"};
}

Outcome c9() {
  double worst = 0.0;
  bool zero = true;
  for (double A : {10.0, 20.0, 35.0})
    for (double E : {0.2, 1.0, 2.0}) {
      worst = std::max(worst, vertex_correction_b0(E, with_A(A)).ratio);
      const auto p = with_A(10 * A);
      zero = zero && vertex_correction_landau(E / 10, p, LandauSpectrum(10.0, p))
                             .ratio == 0.0;
    }
  return {worst <= 1e-8 && zero, "momentum max ratio " + fmt("%.2e", worst) +
                                     ", Landau " + (zero ? "0" : "nonzero")};
}

Outcome c10() {
  const auto p = with_A(500);
  LandauSpectrum sp(10.0, p);
  const double g = sp.hbar_omega_c() / 50.0;
  const double w0 = sp.energy(3, 1) + sp.energy(1, 1);
  double worst = 0.0;
  bool any = false;
  for (double w : grid(w0 - 3 * g, w0 + 3 * g, g / 4)) {
    const auto c = hall_dynamic_counterpart_sum(0.05, w, p, sp, g);
    any = any || c.pairs > 0;
    worst = std::max(worst, std::abs(c.value) / c.kink_amplitude);
  }
  return {any && worst <= 1e-3, "max |pair sum| / kink amplitude " + fmt("%.2e", worst)};
}

Outcome c11() {
  std::vector<std::pair<std::string, double>> r;
  r.push_back({"B=0 E=1.5 A=20", static_limit_check(1.5, with_A(20)).shear_ratio});
  r.push_back({"B=0 E=0 A=10", static_limit_check(0.0, with_A(10)).shear_ratio});
  {
    ModelParams p = with_A(500);
    p.cutoff_Ec = 0.3;
    LandauSpectrum sp(10.0, p);
    r.push_back({"sep. shear N=1",
                 static_limit_check(level_center(1, 1, p, sp), p, &sp).shear_ratio});
    for (double E : {0.05, 0.13, -0.13})
      r.push_back({"sep. Hall E=" + fmt("%g", E),
                   *static_limit_check(E, p, &sp).hall_ratio});
  }
  {
    const auto p = with_A(10);
    LandauSpectrum sp(1.0, p);
    for (double E : {0.3, 0.5})
      r.push_back({"ovl. shear E=" + fmt("%g", E),
                   static_limit_check(E, p, &sp).shear_ratio});
  }
  bool ok = true;
  std::string d;
  for (auto& [k, v] : r) {
    ok = ok && v <= 0.05;
    d += k + ": " + fmt("%.1e", v) + "; ";
  }
  return {ok, d};
}

Outcome c12() {
  double worst = 0.0;
  {
    const auto p = with_A(100);
    LandauSpectrum sp(10.0, p);
    for (double E = 0.01; E < 0.3; E += 0.023) {
      worst = std::max(worst, rel(shear_bfield_numeric(-E, p, sp).value,
                                  shear_bfield_numeric(E, p, sp).value));
      worst = std::max(worst, rel(-hall_static_numeric(-E, p, sp).value,
                                  hall_static_numeric(E, p, sp).value));
    }
    const auto q = with_A(20);
    for (double E = 0.1; E < 2.0; E += 0.3)
      worst = std::max(worst, rel(shear_b0_numeric(-E, q).value,
                                  shear_b0_numeric(E, q).value));
  }
  SweepSpec s;
  s.quantity = Quantity::static_hall;
  s.E = Grid{-0.3, 0.3, 31};
  s.B.list = {10.0};
  s.A = {50, 500};
  auto csv = [&](int t) {
    s.threads = std::max(t, 0);
    std::ostringstream os;
    write_csv(t < 0 ? run_sweep_serial(s) : run_sweep(s), s, os);
    return os.str();
  };
  const std::string ref = csv(-1);
  bool same = true;
  for (int t : {1, 2, 4, 0}) same = same && csv(t) == ref;
  return {worst <= 5e-3 && same, "max symmetry dev " + fmt("%.1e", worst) +
                                     ", CSV identical across threads: " +
                                     (same ? "yes" : "no")};
}

struct Criterion {
  const char* id;
  const char* name;
  double budget_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion all[] = {
      {"C1", "Hall plateau quantization", 120, c1},
      {"C2", "shear quantization at level centres", 60, c2},
      {"C3", "B=0 oracle equivalence", 60, c3},
      {"C4", "disorder enhancement and curve-order inversion", 120, c4},
      {"C5", "magnetic enhancement near the Dirac point", 120, c5},
      {"C6", "dynamic resonances and peak-height ratio", 180, c6},
      {"C7", "e-h limit law", 180, c7},
      {"C8", "crossing frequency", 120, c8},
      {"C9", "vertex nullity", 30, c9},
      {"C10", "counterpart cancellation", 60, c10},
      {"C11", "static limits", 120, c11},
      {"C12", "symmetry and determinism", 60, c12},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && dt <= c.budget_s;
    failed += !pass;
    std::printf("%-4s %s  %s: %s [%.1f s / %.0f s]\n", c.id, pass ? "PASS" : "FAIL",
                c.name, o.detail.c_str(), dt, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(std::size(all)) - failed, std::size(all));
  return failed ? 1 : 0;
}
