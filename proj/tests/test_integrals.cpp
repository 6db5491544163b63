#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cofrob/integrals.hpp"
#include "doctest.h"

using namespace cofrob;

namespace {

Comodule simpleR(const CoalgPtr& C, int i) {
  return restrictComodule(regularComodule(C, Side::Right), C->decomp->simplesRight[i].basis);
}

Comodule simpleL(const CoalgPtr& C, int i) {
  return restrictComodule(regularComodule(C, Side::Left), C->decomp->simplesLeft[i].basis);
}

}  // namespace

TEST_CASE("integral dimensions on the small builders") {
  CoalgPtr M2 = buildMatrixCoalgebra(2);
  CHECK(leftIntegrals(M2, simpleR(M2, 0)).dim() == 2);
  CHECK(rightIntegrals(M2, simpleL(M2, 0)).dim() == 2);
  CoalgPtr D2 = buildDividedPower(2);
  CHECK(leftIntegrals(D2, simpleR(D2, 0)).dim() == 1);
  CoalgPtr F3 = buildPrimitivesFan(3);
  CHECK(leftIntegrals(F3, simpleR(F3, 0)).dim() == 3);
}

TEST_CASE("basis elements are morphisms from the regular comodule") {
  CoalgPtr M2 = buildMatrixCoalgebra(2);
  Comodule S = simpleR(M2, 0);
  Comodule reg = regularComodule(M2, Side::Right);
  IntegralSpace sp = leftIntegrals(M2, S);
  for (const auto& b : sp.basis) CHECK(isComoduleMorphism(reg, S, b));
}

TEST_CASE("side and coalgebra mismatches are rejected") {
  CoalgPtr M2 = buildMatrixCoalgebra(2);
  CoalgPtr D2 = buildDividedPower(2);
  CHECK_THROWS_WITH_AS(leftIntegrals(M2, simpleL(M2, 0)), doctest::Contains("SideMismatch"),
                       Error);
  CHECK_THROWS_WITH_AS(rightIntegrals(M2, simpleR(M2, 0)), doctest::Contains("SideMismatch"),
                       Error);
  CHECK_THROWS_WITH_AS(leftIntegrals(D2, simpleR(M2, 0)),
                       doctest::Contains("CoalgebraMismatch"), Error);
}

TEST_CASE("convolution action on integral spaces") {
  FieldPtr f = Field::rational();
  CoalgPtr M2 = buildMatrixCoalgebra(2);
  IntegralSpace sp = leftIntegrals(M2, simpleR(M2, 0));
  // epsilon is the convolution unit, so it fixes every integral
  Matrix fixed = integralAction(sp, M2->epsilon, sp.basis[0]);
  CHECK(fixed == sp.basis[0]);
  // the action stays inside the computed span on the divided power coalgebra
  CoalgPtr D2 = buildDividedPower(2);
  Comodule regD = regularComodule(D2, Side::Right);
  IntegralSpace spd = leftIntegrals(D2, regD);
  Vec c1s = vecZero(f, 3);
  c1s[1] = Scalar::one(f);
  for (const auto& b : spd.basis) CHECK_NOTHROW(integralAction(spd, c1s, b));
  // a matrix outside the span is rejected
  Matrix junk(f, regD.dim(), D2->dim());
  junk.at(1, 0) = Scalar::one(f);
  CHECK_THROWS_WITH_AS(integralAction(spd, c1s, junk), doctest::Contains("NotInSpace"), Error);
}

TEST_CASE("dual-module hom dimension") {
  CoalgPtr M2 = buildMatrixCoalgebra(2);
  CHECK(cstarDualDim(simpleR(M2, 0)) == 2);
  CoalgPtr D2 = buildDividedPower(2);
  CHECK(cstarDualDim(simpleR(D2, 0)) == 1);
  CHECK(cstarDualDim(regularComodule(D2, Side::Right)) == 3);
}
