// Times the parallel kernels against the serial reference implementations
// on random dense matrices and on the band-sparse operators the library
// actually produces.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "podles/checks.hpp"
#include "podles/matrix.hpp"
#include "podles/operators.hpp"

namespace la = podles::la;

namespace {

la::Matrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  la::Matrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) m.data()[i] = la::Complex{dist(rng), dist(rng)};
  return m;
}

template <typename F>
double time_seconds(int reps, F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count() / reps;
}

void bench_dense(std::size_t n, int reps) {
  std::mt19937 rng(12345);
  const la::Matrix a = random_matrix(rng, n);
  const la::Matrix b = random_matrix(rng, n);

  la::Matrix out_ref, out_par;
  const double t_ref = time_seconds(reps, [&] { out_ref = la::ref::multiply(a, b); });
  const double t_par = time_seconds(reps, [&] { out_par = la::multiply(a, b); });
  const double diff = la::max_abs(la::subtract(out_ref, out_par));
  const double gflops = 8.0 * static_cast<double>(n) * n * n / t_par * 1e-9;

  std::printf("multiply %4zu  serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx  %6.2f GF/s  |diff| %.1e\n",
              n, t_ref * 1e3, t_par * 1e3, t_ref / t_par, gflops, diff);
}

void bench_operator_product(int shells, int reps) {
  const podles::QContext ctx(0.5);
  const podles::Truncation trunc(shells);
  const la::Matrix d = podles::build_dirac(ctx, trunc, podles::DiracParams{});
  const la::Matrix b = podles::build_sphere_gen(ctx, trunc, podles::SphereGen::B);

  la::Matrix out_ref, out_par;
  const double t_ref = time_seconds(reps, [&] { out_ref = la::ref::multiply(d, b); });
  const double t_par = time_seconds(reps, [&] { out_par = la::multiply(d, b); });
  const double diff = la::max_abs(la::subtract(out_ref, out_par));

  std::printf("operator product shells %2d (dim %4zu)  serial %8.2f ms  parallel %8.2f ms  speedup %6.2fx  |diff| %.1e\n",
              shells, trunc.dim(), t_ref * 1e3, t_par * 1e3, t_ref / t_par, diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp\n");
#endif

  bench_dense(128, 20);
  bench_dense(256, 5);
  bench_dense(512, 2);

  // The generators are band sparse; the parallel kernel also skips their
  // zero stripes, which is most of the win at these shapes.
  bench_operator_product(12, 10);
  bench_operator_product(20, 5);
  bench_operator_product(24, 3);
  return 0;
}
