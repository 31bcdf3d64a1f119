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

#include <algorithm>
#include <cmath>
#include <diracvisc/errors.h>
#include <diracvisc/peaks.h>
#include <numeric>

namespace diracvisc {

std::vector<Peak> find_peaks(const std::vector<double>& x,
                             const std::vector<double>& y,
                             double min_prominence, double min_separation) {
  if (x.size() != y.size()) throw DomainError("find_peaks: size mismatch");
  const std::size_t n = y.size();
  std::vector<Peak> all;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;
    // lowest point on each side before reaching higher ground
    double left = y[i], right = y[i];
    for (std::size_t j = i; j-- > 0;) {
      if (y[j] > y[i]) break;
      left = std::min(left, y[j]);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (y[j] > y[i]) break;
      right = std::min(right, y[j]);
    }
    const double prom = y[i] - std::max(left, right);
    if (prom < min_prominence) continue;
    Peak p{x[i], y[i], prom};
    const double h1 = x[i] - x[i - 1], h2 = x[i + 1] - x[i];
    const double d1 = (y[i] - y[i - 1]) / h1, d2 = (y[i + 1] - y[i]) / h2;
    const double c = (d2 - d1) / (h1 + h2);
    if (c < 0.0) {
      const double b = d1 + c * h1;  // slope at x[i]
      const double dx = std::clamp(-b / (2.0 * c), -h1, h2);
      p.x = x[i] + dx;
      p.height = y[i] + b * dx + c * dx * dx;
    }
    all.push_back(p);
  }
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return all[a].height > all[b].height;
  });
  std::vector<Peak> kept;
  for (auto k : order) {
    bool near = false;
    for (const auto& q : kept)
      if (std::abs(q.x - all[k].x) < min_separation) near = true;
    if (!near) kept.push_back(all[k]);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Peak& a, const Peak& b) { return a.x < b.x; });
  return kept;
}

std::vector<double> abs_derivative(const std::vector<double>& x,
                                   const std::vector<double>& y) {
  const std::size_t n = y.size();
  if (n < 2 || x.size() != n) throw DomainError("abs_derivative: bad grid");
  std::vector<double> d(n);
  d[0] = std::abs((y[1] - y[0]) / (x[1] - x[0]));
  d[n - 1] = std::abs((y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]));
  for (std::size_t i = 1; i + 1 < n; ++i)
    d[i] = std::abs((y[i + 1] - y[i - 1]) / (x[i + 1] - x[i - 1]));
  return d;
}

}  // namespace diracvisc
