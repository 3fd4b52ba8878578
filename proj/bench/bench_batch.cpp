// Timing harness for the two parallel kernels against the serial reference
// (threads == 1). Verifies byte-identical output and prints wall times; no
// speedup is asserted because the host may expose a single core.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fap/batch.hpp"
#include "fap/generators.hpp"

namespace {

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp max threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp max threads: not compiled in\n");
#endif

  std::vector<fap::ManifestRow> rows;
  for (int i = 0; i < 240; ++i) {
    fap::ManifestRow row;
    row.kind = fap::ManifestRow::Kind::Random;
    row.params.n = 8 + i % 5;
    row.params.extra_edges = i % 4;
    row.params.zero_fraction = 0.2 * (i % 3);
    row.params.seed = 100 + static_cast<uint64_t>(i);
    rows.push_back(row);
  }
  std::string batch_serial, batch_parallel;
  double bs = timed([&] {
    batch_serial = fap::batch_csv(fap::run_batch(rows, fap::Mode::TwoVC, 1));
  });
  double bp = timed([&] {
    batch_parallel = fap::batch_csv(fap::run_batch(rows, fap::Mode::TwoVC, 0));
  });
  bool batch_same = batch_serial == batch_parallel;
  std::printf("batch rows=%zu serial=%.3fs parallel=%.3fs identical=%s\n", rows.size(), bs,
              bp, batch_same ? "yes" : "NO");

  fap::GenParams p;
  p.n = 10;
  p.extra_edges = 3;
  p.zero_fraction = 0.3;
  p.seed = 2024;
  std::string search_serial, search_parallel;
  double ss = timed([&] {
    search_serial = fap::search_csv(fap::worst_case_search(p, 2000, 1));
  });
  double sp = timed([&] {
    search_parallel = fap::search_csv(fap::worst_case_search(p, 2000, 0));
  });
  bool search_same = search_serial == search_parallel;
  std::printf("search trials=2000 serial=%.3fs parallel=%.3fs identical=%s\n", ss, sp,
              search_same ? "yes" : "NO");

  return batch_same && search_same ? 0 : 1;
}
