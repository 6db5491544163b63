#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cofrob/linalg.hpp"
#include "doctest.h"

using namespace cofrob;

namespace {

Matrix randomMatrix(std::mt19937_64& rng, const FieldPtr& f, int rows, int cols) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix A(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A.at(i, j) = Scalar::fromInt(f, d(rng));
  return A;
}

}  // namespace

TEST_CASE("parallel echelon matches the serial reference") {
  std::mt19937_64 rng(7);
  for (FieldPtr f : {Field::rational(), Field::prime(5)}) {
    for (int t = 0; t < 40; ++t) {
      std::uniform_int_distribution<int> sz(1, 9);
      Matrix A = randomMatrix(rng, f, sz(rng), sz(rng));
      Echelon fast = echelon(A);
      Echelon ref = echelonReference(A);
      CHECK(fast.rank == ref.rank);
      CHECK(fast.pivots == ref.pivots);
      CHECK(fast.rref == ref.rref);
    }
  }
}

TEST_CASE("kernel vectors satisfy the system and follow the free-column convention") {
  std::mt19937_64 rng(11);
  FieldPtr f = Field::rational();
  for (int t = 0; t < 25; ++t) {
    Matrix A = randomMatrix(rng, f, 4, 7);
    auto ker = kernelBasis(A);
    CHECK(static_cast<int>(ker.size()) == 7 - rank(A));
    for (const auto& v : ker) CHECK(vecIsZero(A.apply(v)));
  }
}

TEST_CASE("solveAll full solution set") {
  std::mt19937_64 rng(13);
  FieldPtr f = Field::rational();
  for (int t = 0; t < 25; ++t) {
    Matrix A = randomMatrix(rng, f, 4, 6);
    Vec x = randomMatrix(rng, f, 1, 6).row(0);
    Vec b = A.apply(x);
    auto sol = solveAll(A, b);
    REQUIRE(sol.has_value());
    CHECK(vecEq(A.apply(sol->first), b));
    for (const auto& k : sol->second) CHECK(vecIsZero(A.apply(k)));
  }
  // inconsistent system
  Matrix Z(f, 1, 2);
  Vec b{Scalar::one(f)};
  CHECK_FALSE(solveAll(Z, b).has_value());
}

TEST_CASE("sparse kernel equals the dense kernel") {
  std::mt19937_64 rng(17);
  FieldPtr f = Field::rational();
  std::uniform_int_distribution<int> d(-2, 2), colD(0, 9);
  for (int t = 0; t < 25; ++t) {
    Matrix A(f, 6, 10);
    SparseSystem sys(f, 10);
    for (int i = 0; i < 6; ++i) {
      std::map<int, Scalar> row;
      for (int nz = 0; nz < 3; ++nz) {
        int c = colD(rng);
        Scalar s = Scalar::fromInt(f, d(rng));
        row[c] = (row.count(c) ? row[c] : Scalar::zero(f)) + s;
      }
      for (const auto& [c, s] : row) A.at(i, c) = s;
      sys.addRow(row);
    }
    auto dense = kernelBasis(A);
    auto sparse = sys.kernel();
    REQUIRE(dense.size() == sparse.size());
    for (size_t i = 0; i < dense.size(); ++i) CHECK(vecEq(dense[i], sparse[i]));
  }
}

TEST_CASE("span solver coordinates") {
  std::mt19937_64 rng(19);
  FieldPtr f = Field::rational();
  for (int t = 0; t < 25; ++t) {
    std::vector<Vec> basis;
    for (int i = 0; i < 3; ++i) basis.push_back(randomMatrix(rng, f, 1, 6).row(0));
    SpanSolver solver(f, basis, 6);
    if (solver.rank() < 3) continue;
    Vec combo = vecZero(f, 6);
    std::uniform_int_distribution<int> d(-3, 3);
    Vec coefs = vecZero(f, 3);
    for (int i = 0; i < 3; ++i) {
      coefs[i] = Scalar::fromInt(f, d(rng));
      for (int j = 0; j < 6; ++j) combo[j] += coefs[i] * basis[i][j];
    }
    auto c = solver.coords(combo);
    REQUIRE(c.has_value());
    CHECK(vecEq(*c, coefs));
  }
  // membership rejection
  std::vector<Vec> basis{vecZero(f, 3)};
  basis[0][0] = Scalar::one(f);
  SpanSolver solver(f, basis, 3);
  Vec out = vecZero(f, 3);
  out[1] = Scalar::one(f);
  CHECK_FALSE(solver.coords(out).has_value());
}

TEST_CASE("matrix inverse") {
  std::mt19937_64 rng(23);
  FieldPtr f = Field::rational();
  for (int t = 0; t < 10; ++t) {
    Matrix A = randomMatrix(rng, f, 4, 4);
    if (rank(A) < 4) continue;
    Matrix inv = inverseMatrix(A);
    Matrix prod = A * inv;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(prod.at(i, j) == (i == j ? Scalar::one(f) : Scalar::zero(f)));
  }
  Matrix sing(f, 2, 2);
  CHECK_THROWS_WITH_AS(inverseMatrix(sing), doctest::Contains("invertible"), Error);
}
