// Times the OpenMP kernels against their serial references on the same
// inputs and checks that the results agree.

#include "confhom/loop_homology.hpp"
#include "confhom/series.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

using namespace confhom;
using h_clock = std::chrono::high_resolution_clock;

template <class F>
double seconds(F&& f, int reps) {
  auto t1 = h_clock::now();
  for (int i = 0; i < reps; ++i) f();
  auto t2 = h_clock::now();
  return std::chrono::duration<double>(t2 - t1).count() / reps;
}

int main(int argc, char** argv) {
  const int D = argc > 1 ? std::atoi(argv[1]) : 120;
  const int K = argc > 2 ? std::atoi(argv[2]) : D / 2;
  const int reps = argc > 3 ? std::atoi(argv[3]) : 3;
  const Caps caps{D, K};
  std::cout << "threads " << omp_get_max_threads() << "  caps (" << D << "," << K << ")\n";

  // Dense-ish operands with large coefficients: Omega^3 S^5 mod 2 and mod 3.
  const BiSeries a = factor_series(GradedBetti{{2, 1}, {3, 1}}, 3, FieldChar::two(), caps);
  const BiSeries b = factor_series(GradedBetti{{2, 2}}, 2, FieldChar::odd(3), caps);

  BiSeries par(caps), ser(caps);
  const double t_par = seconds([&] { par = multiply(a, b); }, reps);
  const double t_ser = seconds([&] { ser = multiply_serial(a, b); }, reps);
  std::cout << "multiply       parallel " << t_par << " s  serial " << t_ser << " s  speedup "
            << t_ser / t_par << (par == ser ? "  [match]" : "  [MISMATCH]") << '\n';

  const Integer count("123456789");
  const double f_par = seconds([&] { par = power_factor(a, 3, 1, count, FactorKind::polynomial); }, reps);
  const double f_ser =
      seconds([&] { ser = power_factor_serial(a, 3, 1, count, FactorKind::polynomial); }, reps);
  std::cout << "power_factor   parallel " << f_par << " s  serial " << f_ser << " s  speedup "
            << f_ser / f_par << (par == ser ? "  [match]" : "  [MISMATCH]") << '\n';
  return par == ser ? 0 : 1;
}
