// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "CLI11.hpp"
#include "cube_om/normalize.hpp"
#include "cube_om/reconstruct.hpp"

namespace {

// Best of `reps` wall-clock runs, in milliseconds.
double BestMs(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void Row(const char* kernel, int n, double serial, double parallel, bool same) {
  std::printf("%-22s %2d %12.2f %12.2f %8.2fx  %s\n", kernel, n, serial, parallel, serial / parallel,
              same ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cube_om;
  int max_n = 5;
  int reps = 3;
  int jobs = 0;
  CLI::App app{"Serial vs parallel kernel timings"};
  app.add_option("--n", max_n, "Largest dimension")->check(CLI::Range(2, kMaxDim));
  app.add_option("--reps", reps, "Repetitions per kernel (best is reported)")->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "OpenMP threads (0: runtime default)");
  CLI11_PARSE(app, argc, argv);
  if (jobs > 0) omp_set_num_threads(jobs);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-22s %2s %12s %12s %9s\n", "kernel", "n", "serial ms", "parallel ms", "speedup");
  bool all_same = true;
  for (int n = 2; n <= max_n; ++n) {
    HyperplaneCatalog serial_catalog, catalog;
    const double es = BestMs(reps, [&] { serial_catalog = EnumerateHyperplanesSerial(n); });
    const double ep = BestMs(reps, [&] { catalog = EnumerateHyperplanes(n); });
    Row("enumerate-hyperplanes", n, es, ep, serial_catalog == catalog);
    all_same = all_same && serial_catalog == catalog;

    Orientation serial_aff, aff;
    const double as = BestMs(reps, [&] { serial_aff = AffOrientationSerial(catalog); });
    const double ap = BestMs(reps, [&] { aff = AffOrientation(catalog); });
    Row("aff-orientation", n, as, ap, serial_aff == aff);
    all_same = all_same && serial_aff == aff;

    bool rs = false, rp = false;
    const double vs = BestMs(reps, [&] { rs = VerifyRSerial(catalog, aff); });
    const double vp = BestMs(reps, [&] { rp = VerifyR(catalog, aff); });
    Row("verify-rectangles", n, vs, vp, rs == rp);
    all_same = all_same && rs == rp;

    const std::vector<SignedRectangle> family = FamilyR(n);
    DeterminacyReport ps, pp;
    const double ts = BestMs(reps, [&] { ps = PropagateSerial(catalog, family); });
    const double tp = BestMs(reps, [&] { pp = Propagate(catalog, family); });
    Row("propagate", n, ts, tp, ps.recovered == pp.recovered);
    all_same = all_same && ps.recovered == pp.recovered;
  }
  return all_same ? 0 : 1;
}
