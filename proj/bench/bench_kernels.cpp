// Serial reference vs OpenMP kernels. Usage: bench_kernels [height] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "helixlab/chern.hpp"
#include "helixlab/orbit.hpp"

using namespace helixlab;

namespace {

double best_of(int repeats, const std::function<std::size_t()>& f, std::size_t& result) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    result = f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

void row(const char* name, int repeats, const std::function<std::size_t()>& serial_fn,
         const std::function<std::size_t()>& parallel_fn) {
  std::size_t a = 0, b = 0;
  const double ts = best_of(repeats, serial_fn, a);
  const double tp = best_of(repeats, parallel_fn, b);
  std::printf("%-28s %10zu %10.4f %10.4f %8.2fx%s\n", name, a, ts, tp, ts / tp,
              a == b ? "" : "  MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const long height = argc > 1 ? std::atol(argv[1]) : 10;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("threads: %d, height: %ld, best of %d\n", omp_get_max_threads(), height, repeats);
  std::printf("%-28s %10s %10s %10s %9s\n", "kernel", "size", "serial s", "omp s", "speedup");

  for (const FanoPreset& v : {preset_p3(), preset_q3()}) {
    const GramForm g = v.gram_form();
    const std::string tag = v.name + " ";
    row((tag + "enumerate_exceptional").c_str(), repeats,
        [&] { return serial::enumerate_exceptional(g, height).size(); },
        [&] { return enumerate_exceptional(g, height).size(); });
    row((tag + "enumerate_sod_bases").c_str(), repeats,
        [&] { return serial::enumerate_sod_bases(g, height).size(); },
        [&] { return enumerate_sod_bases(g, height).size(); });
    SearchCaps caps;
    caps.height_cap = Integer(4 * height);
    const Collection start = reference_basis(g.rank());
    row((tag + "orbit_bfs").c_str(), repeats,
        [&] { return serial::orbit_bfs(g, start, caps).size(); },
        [&] { return orbit_bfs(g, start, caps).size(); });
  }
  return 0;
}
