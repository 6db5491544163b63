#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cofrob/coalgebra.hpp"
#include "doctest.h"

using namespace cofrob;

TEST_CASE("builders produce valid coalgebras") {
  CHECK(validateCoalgebra(*buildMatrixCoalgebra(2)).valid);
  CHECK(validateCoalgebra(*buildMatrixCoalgebra(3)).valid);
  CHECK(validateCoalgebra(*buildDividedPower(3)).valid);
  CHECK(validateCoalgebra(*buildPrimitivesFan(2)).valid);
}

TEST_CASE("convolution algebra of the divided power coalgebra") {
  CoalgPtr D3 = buildDividedPower(3);
  const DualAlgebra& dual = dualAlgebra(*D3);
  // c_i* c_j* = c_{i+j}*, truncated past the top degree
  Vec c1 = vecZero(dual.field, 4);
  c1[1] = Scalar::one(dual.field);
  Vec p = dual.multiply(c1, c1);
  CHECK(p[2].isOne());
  CHECK(p[0].isZero());
  CHECK(p[1].isZero());
  CHECK(p[3].isZero());
  // epsilon is the unit of the convolution algebra
  Vec u = dual.unit;
  CHECK(vecEq(dual.multiply(u, c1), c1));
}

TEST_CASE("broken coassociativity is reported") {
  Coalgebra bad = *buildDividedPower(3);
  bad.cache = std::make_shared<CoalgCache>();
  bad.delta[3].pop_back();
  ValidationReport r = validateCoalgebra(bad);
  CHECK_FALSE(r.valid);
  CHECK_FALSE(r.issues.empty());
}

TEST_CASE("algebra dual construction and its round trip") {
  FieldPtr f = Field::rational();
  // K[x]/(x^2)
  AlgebraPresentation A;
  A.field = f;
  A.basisNames = {"1", "x"};
  A.unit = vecZero(f, 2);
  A.unit[0] = Scalar::one(f);
  A.multTable.assign(2, std::vector<Vec>(2, vecZero(f, 2)));
  A.multTable[0][0] = A.unit;
  Vec x = vecZero(f, 2);
  x[1] = Scalar::one(f);
  A.multTable[0][1] = A.multTable[1][0] = x;
  CoalgPtr C = buildDualOfAlgebra(A);
  CHECK(validateCoalgebra(*C).valid);
  // the dual of K[x]/(x^2) has the divided power structure constants
  CoalgPtr D1 = buildDividedPower(1);
  auto deltaMap = [](const Coalgebra& X, int k) {
    std::map<std::pair<int, int>, Scalar> m;
    for (const auto& t : X.delta[k]) {
      auto [it, fresh] = m.try_emplace({t.left, t.right}, t.c);
      if (!fresh) it->second += t.c;
    }
    return m;
  };
  CHECK(C->dim() == D1->dim());
  for (int k = 0; k < C->dim(); ++k) CHECK(deltaMap(*C, k) == deltaMap(*D1, k));

  // dualizing the convolution algebra of a coalgebra recovers its structure
  const DualAlgebra& dd = dualAlgebra(*D1);
  AlgebraPresentation P;
  P.field = f;
  P.basisNames = {"f0", "f1"};
  P.unit = dd.unit;
  P.multTable.assign(2, std::vector<Vec>(2, vecZero(f, 2)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Vec ei = vecZero(f, 2), ej = vecZero(f, 2);
      ei[i] = ej[j] = Scalar::one(f);
      P.multTable[i][j] = dd.multiply(ei, ej);
    }
  CoalgPtr back = buildDualOfAlgebra(P);
  for (int k = 0; k < 2; ++k) CHECK(deltaMap(*back, k) == deltaMap(*D1, k));
  CHECK(vecEq(back->epsilon, D1->epsilon));
}

TEST_CASE("bad algebra presentations are rejected") {
  FieldPtr f = Field::rational();
  AlgebraPresentation A;
  A.field = f;
  A.basisNames = {"a", "b"};
  A.unit = vecZero(f, 2);  // no unit at all
  A.multTable.assign(2, std::vector<Vec>(2, vecZero(f, 2)));
  CHECK_THROWS_WITH_AS(buildDualOfAlgebra(A), doctest::Contains("NoUnit"), Error);

  // non-associative table: a*a = b, (a*a)*a = 0 but a*(a*a) = a
  AlgebraPresentation B;
  B.field = f;
  B.basisNames = {"1", "a", "b"};
  B.unit = vecZero(f, 3);
  B.unit[0] = Scalar::one(f);
  B.multTable.assign(3, std::vector<Vec>(3, vecZero(f, 3)));
  for (int i = 0; i < 3; ++i) {
    Vec ei = vecZero(f, 3);
    ei[i] = Scalar::one(f);
    B.multTable[0][i] = B.multTable[i][0] = ei;
  }
  Vec b = vecZero(f, 3), a = vecZero(f, 3);
  b[2] = Scalar::one(f);
  a[1] = Scalar::one(f);
  B.multTable[1][1] = b;
  B.multTable[2][1] = a;  // (a a) a = b a = a, a (a a) = a b = 0
  CHECK_THROWS_WITH_AS(buildDualOfAlgebra(B), doctest::Contains("NotAssociative"), Error);
}

TEST_CASE("attached decomposition data is bookkept") {
  CoalgPtr M2 = buildMatrixCoalgebra(2);
  REQUIRE(M2->decomp.has_value());
  CHECK(M2->decomp->simplesRight.size() == 1);
  CHECK(M2->decomp->simplesRight[0].mult == 2);
  CHECK(M2->decomp->injectivesRight.size() == 2);
  CoalgPtr F2 = buildPrimitivesFan(2);
  CHECK(F2->decomp->injectivesRight.size() == 1);
  CHECK(F2->decomp->injectivesRight[0].basis.size() == 3);
}
