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
#include <doctest.h>

#include "check.h"
#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <diracvisc/kubo_dynamic.h>
#include <diracvisc/peaks.h>
#include <diracvisc/scba.h>
#include <vector>

using namespace diracvisc;

namespace {
const double pi = 3.14159265358979323846;

ModelParams with_A(double A) {
  ModelParams p;
  p.disorder_A = A;
  return p;
}

std::vector<double> grid(double a, double b, double h) {
  std::vector<double> x;
  for (long i = 0; a + i * h <= b + 1e-12; ++i) x.push_back(a + i * h);
  return x;
}

// distinct transition frequencies, merged within tol
std::vector<double> distinct_frequencies(const std::vector<Transition>& t,
                                         double tol) {
  std::vector<double> f;
  for (const auto& x : t)
    if (f.empty() || x.frequency - f.back() > tol) f.push_back(x.frequency);
  return f;
}

bool has_transition(const std::vector<Transition>& t, LandauState a,
                    LandauState b, double freq, double tol) {
  return std::any_of(t.begin(), t.end(), [&](const Transition& x) {
    return x.from.n == a.n && x.from.s == a.s && x.to.n == b.n &&
           x.to.s == b.s && std::abs(x.frequency - freq) <= tol;
  });
}

double nearest(const std::vector<double>& xs, double x) {
  double d = 1e300;
  for (double y : xs) d = std::min(d, std::abs(y - x));
  return d;
}
}  // namespace

TEST_CASE("e-h closed form") {
  const auto p = with_A(20);
  const double v = p.hbar_vf;
  const double ref = 1.0 / (16.0 * v * v) * (0.5 + 16.0 / (15.0 * 20.0));
  CHECK_REL(shear_dynamic_b0_eh_limit(1.0, p), ref, 1e-12);
  CHECK_REL(shear_dynamic_b0_eh_limit(1.0, p), 0.0798, 1e-3);
  CHECK_REL(shear_dynamic_b0_eh_limit(0.6, p), 4.0 * shear_dynamic_b0_eh_limit(0.3, p), 1e-12);
  CHECK_REL(shear_dynamic_b0_eh_limit(1.0, with_A(1e12)), 1.0 / (32.0 * v * v), 1e-9);
}

TEST_CASE("e-e closed form") {
  const auto p = with_A(20);
  const double v = p.hbar_vf, E = 1.5, W = 0.1, A = 20.0;
  const double pre = E * E / (2.0 * pi * pi * v * v);
  const double ref = pre * (pi * pi / A + A * E * E / (A * A / (pi * pi) * W * W + 4.0 * E * E));
  CHECK_REL(shear_dynamic_b0_ee_limit(E, W, p), ref, 1e-12);
  // 1.381 is a loose reference value; direct evaluation gives 1.3887
  CHECK_REL(shear_dynamic_b0_ee_limit(E, W, p), 1.381, 0.01);
  CHECK_REL(shear_dynamic_b0_ee_limit(E, 1e-9, p), pre * (pi * pi / A + A / 4.0), 1e-12);
  double prev = 1e300;
  for (double w = 0.01; w < 1.0; w += 0.05) {
    const double x = shear_dynamic_b0_ee_limit(E, w, p);
    CHECK(x < prev);
    prev = x;
  }
}

TEST_CASE("B = 0 dynamic shear against the sublattice trace") {
  const auto p = with_A(20);
  auto sig = [&](double w) { return solve_self_energy_b0(w, p).sigma; };
  for (auto [E, W] : {std::pair{0.5, 0.3}, std::pair{0.0, 0.6}})
    CHECK_REL(shear_dynamic_b0(E, W, p), oracle::shear_b0_dynamic_trace(E, W, p, sig), 1e-4);
}

TEST_CASE("clean e-h limit of the window integral") {
  // Kubo window with the static normalization gives d W^2 / (256 v^2),
  // half the closed form's clean limit
  const auto p = with_A(1000);
  const double v = p.hbar_vf;
  CHECK_REL(shear_dynamic_b0(0.0, 1.0, p), 4.0 / (256.0 * v * v), 0.02);
}

TEST_CASE("B = 0 dynamic shear") {
  const auto p = with_A(20);
  // e-h region
  CHECK_REL(shear_dynamic_b0(0.0, 1.0, p), shear_dynamic_b0_eh_limit(1.0, p), 0.15);
  // the A = 10 and A = 20 curves cross near 0.4 eV at E = 1.5
  const auto q = with_A(10);
  auto d = [&](double w) { return shear_dynamic_b0(1.5, w, q) - shear_dynamic_b0(1.5, w, p); };
  double lo = 0.05, hi = 1.0;
  REQUIRE(d(lo) * d(hi) < 0.0);
  for (int i = 0; i < 50; ++i) {
    const double m = 0.5 * (lo + hi);
    (d(lo) * d(m) <= 0.0 ? hi : lo) = m;
  }
  CHECK_ABS(0.5 * (lo + hi), 0.4, 0.1);
}

TEST_CASE("e-h and e-e frequency trends") {
  const auto p = with_A(20);
  double prev = shear_dynamic_b0(0.0, 0.2, p);
  for (double w = 0.25; w <= 1.0 + 1e-12; w += 0.05) {
    const double x = shear_dynamic_b0(0.0, w, p);
    CHECK(x > prev);
    prev = x;
  }
  prev = shear_dynamic_b0(1.5, 0.01, p);
  for (double w = 0.03; w <= 0.3 + 1e-12; w += 0.02) {
    const double x = shear_dynamic_b0(1.5, w, p);
    CHECK(x < prev);
    prev = x;
  }
}

TEST_CASE("frequency symmetry") {
  const auto p = with_A(20);
  // -Omega runs the window over [E, E + |Omega|]; equal up to quadrature
  for (double w : {0.1, 0.7})
    CHECK_REL(shear_dynamic_b0(0.5, -w, p), shear_dynamic_b0(0.5, w, p), 1e-8);
  const auto q = with_A(500);
  LandauSpectrum sp(10.0, q);
  const double g = sp.hbar_omega_c() / 50.0;
  for (double w : {0.09, 0.1623, 0.3})
    CHECK_REL(shear_dynamic_bfield(0.05, -w, q, sp, g),
              shear_dynamic_bfield(0.05, w, q, sp, g), 1e-10);
}

TEST_CASE("transition table") {
  const auto p = with_A(500);
  LandauSpectrum sp(10.0, p);
  const auto t1 = transition_table(0.05, sp, 0.4);
  CHECK(has_transition(t1, {0, 1}, {2, 1}, 0.162, 1e-3));
  CHECK(has_transition(t1, {1, -1}, {3, 1}, 0.313, 1e-3));
  CHECK(has_transition(t1, {3, -1}, {1, 1}, 0.313, 1e-3));
  CHECK_FALSE(has_transition(t1, {1, 1}, {3, 1}, 0.084, 1e-3));
  const auto t2 = transition_table(0.13, sp, 0.4);
  CHECK(has_transition(t2, {1, 1}, {3, 1}, 0.084, 1e-3));
  CHECK_FALSE(has_transition(t2, {3, -1}, {1, 1}, 0.313, 1e-3));
  for (const auto& x : t2) {
    CHECK(std::abs(x.from.n - x.to.n) == 2);
    CHECK(x.frequency >= 0.0);
    CHECK(x.frequency <= 0.4);
    CHECK(x.weight == double(std::min(x.from.n, x.to.n) + 1));
    // occupied -> empty always straddles E_F; the kind is relative to the
    // Dirac point
    const double a = sp.energy(x.from.n, x.from.s), b = sp.energy(x.to.n, x.to.s);
    CHECK(a < 0.13);
    CHECK(b > 0.13);
    CHECK((x.kind == TransitionKind::electron_hole) == (a <= 0.0 || b <= 0.0));
  }
  for (std::size_t i = 1; i < t2.size(); ++i)
    CHECK(t2[i - 1].frequency <= t2[i].frequency);
  CHECK(std::any_of(t2.begin(), t2.end(), [](const Transition& x) {
    return x.kind == TransitionKind::electron_electron;
  }));
  CHECK(transition_table(50.0, sp, 0.4).empty());
}

TEST_CASE("shear resonances match the transition table") {
  const auto p = with_A(500);
  LandauSpectrum sp(10.0, p);
  const double g = sp.hbar_omega_c() / 50.0;
  const auto x = grid(0.02, 0.4, 5e-4);
  for (double EF : {0.05, 0.13}) {
    std::vector<double> y;
    for (double w : x) y.push_back(shear_dynamic_bfield(EF, w, p, sp, g));
    const double ymax = *std::max_element(y.begin(), y.end());
    const auto pk = find_peaks(x, y, 0.05 * ymax, 2.0 * g);
    std::vector<double> px;
    for (const auto& k : pk) px.push_back(k.x);
    const auto f = distinct_frequencies(transition_table(EF, sp, 0.4), g);
    INFO("E_F = ", EF, ", peaks ", px.size(), ", table ", f.size());
    CHECK(px.size() == f.size());
    for (double fx : f) CHECK(nearest(px, fx) <= g);
    for (double q : px) CHECK(nearest(f, q) <= g);
  }
}

TEST_CASE("peak additivity of the (1- -> 3+) resonance") {
  const auto p = with_A(500);
  LandauSpectrum sp(10.0, p);
  const double g = sp.hbar_omega_c() / 50.0;
  const double w0 = sp.energy(3, 1) + sp.energy(1, 1);
  auto peak = [&](double EF) {
    const auto x = grid(w0 - 5 * g, w0 + 5 * g, g / 20);
    std::vector<double> y;
    for (double w : x) y.push_back(shear_dynamic_bfield(EF, w, p, sp, g));
    return *std::max_element(y.begin(), y.end());
  };
  CHECK_REL(peak(0.05) / peak(0.13), 2.0, 0.10);
}

TEST_CASE("e-e resonance grows like Omega^-3") {
  // clean limit, larger cutoff so that the e-e frequencies span a decade
  ModelParams p = with_A(500);
  p.cutoff_Ec = 20.0;
  LandauSpectrum sp(10.0, p);
  std::vector<double> lx, ly;
  for (int k = 0; k <= 9; ++k) {
    const long n = std::lround(100.0 * std::pow(10.0, k / 4.0));
    const double EF = 0.5 * (sp.energy(n, 1) + sp.energy(n + 1, 1));
    const double w = 0.5 * (sp.energy(n + 1, 1) - sp.energy(n - 1, 1) +
                            sp.energy(n + 2, 1) - sp.energy(n, 1));
    lx.push_back(std::log(w));
    ly.push_back(std::log(shear_dynamic_bfield(EF, w, p, sp, gamma_floor)));
  }
  REQUIRE(std::exp(lx.front() - lx.back()) >= 10.0);
  const double n = double(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK_ABS(slope, -3.0, 0.3);
}

TEST_CASE("Hall kinks") {
  const auto p = with_A(500);
  LandauSpectrum sp(10.0, p);
  const double g = sp.hbar_omega_c() / 50.0;
  const auto x = grid(0.02, 0.4, 2.5e-4);
  auto kinks = [&](double EF) {
    std::vector<double> y;
    for (double w : x) y.push_back(hall_dynamic_reduced(EF, w, p, sp, g));
    const auto dy = abs_derivative(x, y);
    const double m = *std::max_element(dy.begin(), dy.end());
    std::vector<double> out;
    for (const auto& k : find_peaks(x, dy, 0.05 * m, 2.0 * g)) out.push_back(k.x);
    return out;
  };
  const auto k1 = kinks(0.05);
  REQUIRE(k1.size() == 1);
  CHECK_ABS(k1[0], 0.16, g);
  CHECK_ABS(k1[0], sp.energy(2, 1) - sp.energy(0, 1), g);
  const auto k2 = kinks(0.13);
  REQUIRE(k2.size() == 3);
  const double ref[3] = {sp.energy(3, 1) - sp.energy(1, 1),
                         sp.energy(2, 1) - sp.energy(0, 1),
                         sp.energy(3, 1) + sp.energy(1, 1)};
  for (int i = 0; i < 3; ++i) CHECK_ABS(k2[i], ref[i], g);
  // rounded resonance positions
  CHECK_ABS(k2[0], 0.09, 0.01);
  CHECK_ABS(k2[1], 0.16, 0.01);
  CHECK_ABS(k2[2], 0.31, 0.01);
}

TEST_CASE("counterparts cancel") {
  const auto p = with_A(500);
  LandauSpectrum sp(10.0, p);
  const double g = sp.hbar_omega_c() / 50.0;
  const double w0 = sp.energy(3, 1) + sp.energy(1, 1);
  for (double w : {w0 - g, w0, w0 + 0.5 * g, 0.2}) {
    const auto c = hall_dynamic_counterpart_sum(0.05, w, p, sp, g);
    REQUIRE(c.pairs > 0);
    CHECK(std::abs(c.value) <= 1e-3 * c.kink_amplitude);
  }
}

TEST_CASE("kink antisymmetry") {
  const auto p = with_A(500);
  LandauSpectrum sp(10.0, p);
  const double g = sp.hbar_omega_c() / 50.0;
  const double wc = sp.energy(2, 1) - sp.energy(0, 1);
  auto h = [&](double w) { return hall_dynamic_reduced(0.05, w, p, sp, g); };
  const auto x = grid(wc - 3 * g, wc + 3 * g, g / 50);
  double hi = -1e300, lo = 1e300;
  for (double w : x) {
    hi = std::max(hi, h(w));
    lo = std::min(lo, h(w));
  }
  const double amp = 0.5 * (hi - lo);
  const double base = h(wc);
  for (double d : {0.25 * g, 0.5 * g, g}) {
    INFO("delta = ", d);
    CHECK(std::abs(h(wc + d) + h(wc - d) - 2.0 * base) <= 0.05 * amp);
  }
}

TEST_CASE("static limits") {
  {
    const auto r = static_limit_check(1.5, with_A(20));
    CHECK(r.regime == Regime::b_zero);
    CHECK(r.shear_ratio <= 0.02);
    CHECK_FALSE(r.hall_ratio.has_value());
  }
  // at E = 0 the static limit is reached once Omega < Gamma(0); for A = 10
  // Gamma(0) ~ 0.05 eV
  CHECK(static_limit_check(0.0, with_A(10)).shear_ratio <= 0.05);
  ModelParams p = with_A(500);
  p.cutoff_Ec = 0.3;
  LandauSpectrum sp(10.0, p);
  for (double E : {0.05, 0.13, -0.13}) {
    const auto r = static_limit_check(E, p, &sp);
    REQUIRE(r.hall_ratio.has_value());
    CHECK(*r.hall_ratio <= 0.02);
  }
  CHECK(static_limit_check(level_center(1, 1, p, sp), p, &sp).shear_ratio <= 0.02);
}

TEST_CASE("static limit at the Dirac point, A = 20" * doctest::may_fail()) {
  // Gamma(0) = 3e-4 eV < Omega = 1e-3 eV: not yet static
  CHECK(static_limit_check(0.0, with_A(20)).shear_ratio <= 0.05);
}
