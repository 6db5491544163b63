// Times the serial reference elimination against the production kernel on
// random matrices over Q and over a prime field, and checks they agree.
#include <chrono>
#include <cstdio>
#include <random>

#include "cofrob/linalg.hpp"

using namespace cofrob;

namespace {

Matrix randomMatrix(std::mt19937_64& rng, const FieldPtr& f, int n, int m) {
  std::uniform_int_distribution<long> d(-20, 20);
  Matrix A(f, n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) A.at(i, j) = Scalar::fromInt(f, d(rng));
  return A;
}

template <class F>
double msOf(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench(const char* label, const FieldPtr& f, int n) {
  std::mt19937_64 rng(42);
  Matrix A = randomMatrix(rng, f, n, n + n / 4);
  Echelon ref, prod;
  double tRef = msOf([&] { ref = echelonReference(A); });
  double tProd = msOf([&] { prod = echelon(A); });
  bool agree = ref.rref == prod.rref && ref.pivots == prod.pivots;
  std::printf("%-12s n=%3d  reference %8.1f ms  production %8.1f ms  speedup %5.2fx  %s\n",
              label, n, tRef, tProd, tProd > 0 ? tRef / tProd : 0.0,
              agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int maxN = argc > 1 ? std::atoi(argv[1]) : 160;
  for (int n = 40; n <= maxN; n *= 2) {
    bench("rational", Field::rational(), n);
    bench("prime(10007)", Field::prime(10007), n);
  }
  return 0;
}
