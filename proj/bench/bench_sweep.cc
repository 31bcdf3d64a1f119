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
// Serial reference vs the OpenMP sweep on the same grids.

#include <benchmark/benchmark.h>

#include <diracvisc/sweep.h>
#include <omp.h>

using namespace diracvisc;

namespace {

SweepSpec static_hall_spec() {
  SweepSpec s;
  s.quantity = Quantity::static_hall;
  s.E = Grid{-0.3, 0.3, 24};
  s.B.list = {10.0};
  s.A = {100.0};
  return s;
}

SweepSpec dynamic_shear_spec() {
  SweepSpec s;
  s.quantity = Quantity::dynamic_shear;
  s.E.list = {0.5};
  s.Omega = Grid{0.05, 1.0, 24};
  s.A = {20.0};
  return s;
}

void BM_serial(benchmark::State& st, SweepSpec (*make)()) {
  const auto s = make();
  for (auto _ : st) benchmark::DoNotOptimize(run_sweep_serial(s).rows.data());
  st.SetItemsProcessed(st.iterations() * int64_t(run_sweep_serial(s).rows.size()));
}

void BM_openmp(benchmark::State& st, SweepSpec (*make)()) {
  auto s = make();
  s.threads = int(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(run_sweep(s).rows.data());
  st.counters["threads"] = double(s.threads ? s.threads : omp_get_max_threads());
}

}  // namespace

BENCHMARK_CAPTURE(BM_serial, static_hall, static_hall_spec)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_openmp, static_hall, static_hall_spec)
    ->Arg(1)->Arg(2)->Arg(4)->Arg(0)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_serial, dynamic_shear, dynamic_shear_spec)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_openmp, dynamic_shear, dynamic_shear_spec)
    ->Arg(1)->Arg(2)->Arg(4)->Arg(0)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
