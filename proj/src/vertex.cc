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

#include <cmath>
#include <diracvisc/errors.h>
#include <diracvisc/kubo_static.h>
#include <diracvisc/quadrature.h>
#include <diracvisc/scba.h>
#include <diracvisc/vertex.h>

namespace diracvisc {

namespace {
constexpr double pi = 3.14159265358979323846;

// U_k^+ U_k' for a rotation by d
Eigen::Matrix2cd rotation(double d) {
  const cplx e = std::exp(cplx(0.0, d));
  Eigen::Matrix2cd u;
  u << 1.0 + e, 1.0 - e, 1.0 - e, 1.0 + e;
  return 0.5 * u;
}
}  // namespace

std::string to_string(VertexBasis b) {
  return b == VertexBasis::momentum ? "momentum" : "landau";
}

VertexReport vertex_correction_b0(double E, const ModelParams& p,
                                  int angular_nodes) {
  p.validate();
  if (angular_nodes < 8) throw DomainError("angular_nodes must be >= 8");
  const double v = p.hbar_vf;
  const cplx z = E - solve_self_energy_b0(E, p).sigma;
  // n_i V0^2 in the normalisation where Sigma = -(z/A) log(...)
  const double nv2 = 4.0 * pi * v * v / p.disorder_A;
  const double theta = 0.3;  // any direction; the result is isotropic
  const double kref = std::abs(z) / v;

  auto angular = [&](double k) {
    const cplx gp = 1.0 / (z - v * k), gm = 1.0 / (z + v * k);
    Eigen::Matrix2cd GR = Eigen::Matrix2cd::Zero(), GA;
    GR(0, 0) = gp;
    GR(1, 1) = gm;
    GA = GR.conjugate();
    Eigen::Matrix2cd acc = Eigen::Matrix2cd::Zero();
    for (int j = 0; j < angular_nodes; ++j) {
      const double tp = 2.0 * pi * j / angular_nodes;
      const Eigen::Matrix2cd U = rotation(tp - theta);
      acc += U * GR * stress_kspace(k, tp, StressComponent::XY, p) * GA *
             U.adjoint();
    }
    // d^2k/(2pi)^2 = k dk dtheta/(4 pi^2), trapezoid weight 2pi/N
    return Eigen::Matrix2cd(acc * (k / (2.0 * pi * angular_nodes)));
  };

  const Eigen::Matrix2cd bare =
      stress_kspace(kref, theta, StressComponent::XY, p);
  const double norm_bare = bare.norm();
  const double kmax = p.cutoff_Ec / v;
  std::vector<double> bp;
  if (std::abs(z.real()) / v < kmax) bp.push_back(std::abs(z.real()) / v);
  Eigen::Matrix2cd corr;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int part = 0; part < 2; ++part) {
        auto f = [&](double k) {
          const cplx x = angular(k)(r, c);
          return part == 0 ? x.real() : x.imag();
        };
        // the integrand is roundoff noise; bound it against the bare scale
        QuadOptions q{1e-14 * norm_bare / nv2, 0.0, 200,
                      1e-10 * norm_bare / nv2};
        const double val = integrate(f, 0.0, kmax, q, bp).value;
        if (part == 0)
          corr(r, c) = val;
        else
          corr(r, c) += cplx(0.0, val);
      }
  corr *= nv2;
  const double nc = corr.norm();
  return {VertexBasis::momentum, norm_bare, nc, nc / norm_bare};
}

VertexReport vertex_correction_landau(double E, const ModelParams& p,
                                      const LandauSpectrum& spec) {
  p.validate();
  const cplx sig = solve_self_energy_landau(E, p, spec).sigma;
  const long nmax = gap_index(std::abs(E), spec) + 4;
  const double l = spec.l_B();
  const double nv2 = 4.0 * pi * p.hbar_vf * p.hbar_vf / p.disorder_A;
  std::vector<LandauState> st;
  for (long n = 0; n <= nmax; ++n)
    for (int s : {-1, 1})
      if (n > 0 || s > 0) st.push_back({n, s});
  auto G = [&](const LandauState& a) {
    return 1.0 / (E - sig - spec.energy(a.n, a.s));
  };
  double bare2 = 0.0, corr2 = 0.0;
  for (const auto& a : st)
    for (const auto& b : st) {
      bare2 += std::norm(stress_element_xy(a, b, spec));
      const double ss = a.s * b.s;
      cplx acc = 0.0;
      for (const auto& c : st)
        for (const auto& d : st) {
          double w = 0.0;
          if (a.n == b.n && c.n == d.n) w += ss * c.s * d.s + 1.0;
          if (a.n == b.n + 1 && c.n == d.n + 1) w += a.s * c.s;
          if (a.n + 1 == b.n && c.n + 1 == d.n) w += b.s * d.s;
          if (w == 0.0) continue;
          acc += w * G(c) * std::conj(G(d)) * stress_element_xy(c, d, spec);
        }
      corr2 += std::norm(nv2 / (8.0 * pi * l * l) * acc);
    }
  const double nb = std::sqrt(bare2), nc = std::sqrt(corr2);
  return {VertexBasis::landau, nb, nc, nc / nb};
}

}  // namespace diracvisc
