// Wall-clock comparison of the serial reference kernels and their OpenMP
// counterparts. Each pair is also checked for identical output.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "indpow/counting.hpp"
#include "indpow/cubes.hpp"
#include "indpow/enumerate.hpp"
#include "indpow/graph.hpp"

using namespace indpow;

namespace {

template <typename F>
double best_ms(F&& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double, std::milli> took =
        std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

bool row(const std::string& name, double serial_ms, double parallel_ms, bool same) {
  std::printf("%-36s %10.2f %10.2f %7.2fx  %s\n", name.c_str(), serial_ms,
              parallel_ms, serial_ms / parallel_ms, same ? "match" : "MISMATCH");
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-36s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

  bool ok = true;
  for (auto [n, h] : {std::pair{34, 2}, std::pair{44, 3}}) {
    const auto g = power_path(n, h);
    std::vector<VertexSubset> a, b;
    const double s = best_ms([&] { a = serial::enumerate_independent(g); }, reps);
    const double p = best_ms([&] { b = enumerate_independent(g); }, reps);
    ok &= row("enumerate P_" + std::to_string(n) + "^" + std::to_string(h), s, p,
              a == b);
  }
  for (auto [n, h] : {std::pair{20, 1}, std::pair{20, 0}}) {
    const auto g = power_cycle(n, h);
    PosetDiagram a, b;
    const double s = best_ms([&] { a = serial::hasse_diagram(g); }, reps);
    const double p = best_ms([&] { b = hasse_diagram(g); }, reps);
    ok &= row("hasse Q_" + std::to_string(n) + "^" + std::to_string(h), s, p,
              a.levels == b.levels && a.covers == b.covers);
  }
  for (auto [n_max, h] : {std::pair{2000, 1}, std::pair{2000, 4}}) {
    std::vector<ExactInt> a, b;
    const double s = best_ms([&] { a = serial::h_edges_conv_table(n_max, h); }, reps);
    const double p = best_ms([&] { b = h_edges_conv_table(n_max, h); }, reps);
    ok &= row("edge table n<=" + std::to_string(n_max) + " h=" + std::to_string(h),
              s, p, a == b);
  }
  return ok ? 0 : 1;
}
