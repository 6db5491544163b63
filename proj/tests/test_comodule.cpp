#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cofrob/graphcoalg.hpp"
#include "cofrob/random_gen.hpp"
#include "doctest.h"

using namespace cofrob;

namespace {

// the standard row comodule over the 2x2 comatrix coalgebra
Comodule rowComodule(const CoalgPtr& M2) {
  FieldPtr f = M2->field;
  Comodule S;
  S.side = Side::Right;
  S.coalg = M2;
  S.basisNames = {"v1", "v2"};
  S.rho.resize(2);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) S.rho[j].push_back({k, k * 2 + j, Scalar::one(f)});
  return S;
}

Vec unit(const FieldPtr& f, int n, int i) {
  Vec v = vecZero(f, n);
  v[i] = Scalar::one(f);
  return v;
}

}  // namespace

TEST_CASE("coaction validation and the dual-algebra action") {
  FieldPtr f = Field::rational();
  CoalgPtr M2 = buildMatrixCoalgebra(2);
  Comodule S = rowComodule(M2);
  CHECK(validateComodule(S).valid);
  Vec e11 = unit(f, 4, 0), v1 = unit(f, 2, 0), v2 = unit(f, 2, 1);
  CHECK(vecEq(cstarAction(S, e11, v1), v1));
  CHECK(vecIsZero(cstarAction(S, e11, v2)));
  CHECK(homBasis(S, S).size() == 1);
  Comodule reg = regularComodule(M2, Side::Right);
  CHECK(validateComodule(reg).valid);
  CHECK(homBasis(reg, S).size() == 2);
  // a broken coaction is caught
  Comodule bad = S;
  bad.rho[0].pop_back();
  CHECK_FALSE(validateComodule(bad).valid);
}

TEST_CASE("duals flip the side and pair back") {
  CoalgPtr M2 = buildMatrixCoalgebra(2);
  Comodule S = rowComodule(M2);
  Comodule Sd = dualComodule(S);
  CHECK(validateComodule(Sd).valid);
  CHECK(Sd.side == Side::Left);
  Comodule Sdd = dualComodule(Sd);
  CHECK_FALSE(homBasis(S, Sdd).empty());
}

TEST_CASE("radical, socle, cosocle, coradical") {
  FieldPtr f = Field::rational();
  CoalgPtr D2 = buildDividedPower(2);
  CHECK(coalgRadical(*D2).size() == 2);  // span(c1*, c2*)
  Comodule regD = regularComodule(D2, Side::Right);
  Comodule S0 = restrictComodule(regD, {unit(f, 3, 0)});
  CHECK(homBasis(regD, S0).size() == 1);
  auto cosoc = cosocle(regD);
  CHECK(cosoc.quot.dim() == 1);
  CHECK(validateComodule(cosoc.quot).valid);

  CoalgPtr F3 = buildPrimitivesFan(3);
  Comodule regF = regularComodule(F3, Side::Right);
  auto soc = socle(regF);
  REQUIRE(soc.size() == 1);
  CHECK(soc[0][0].isOne());
  CHECK(homBasis(regF, restrictComodule(regF, soc)).size() == 3);

  auto cor = coradical(*buildDividedPower(4));
  REQUIRE(cor.size() == 1);
  CHECK(cor[0][0].isOne());
}

TEST_CASE("restriction and quotient error out on non-stable spans") {
  FieldPtr f = Field::rational();
  CoalgPtr D2 = buildDividedPower(2);
  Comodule regD = regularComodule(D2, Side::Right);
  std::vector<Vec> notStable{unit(f, 3, 2)};  // c2 alone generates everything
  CHECK_THROWS_WITH_AS(restrictComodule(regD, notStable), doctest::Contains("NotASubcomodule"),
                       Error);
  CHECK_THROWS_WITH_AS(quotientComodule(regD, notStable), doctest::Contains("NotASubcomodule"),
                       Error);
  CHECK(generatedSubcomodule(regD, notStable).size() == 3);
}

TEST_CASE("decomposition validation accepts ground truth and rejects tampering") {
  CoalgPtr M2 = buildMatrixCoalgebra(2);
  CHECK(validateDecomposition(*M2, *M2->decomp).valid);
  CHECK(validateDecomposition(*buildDividedPower(2), *buildDividedPower(2)->decomp).valid);
  CHECK(validateDecomposition(*buildPrimitivesFan(3), *buildPrimitivesFan(3)->decomp).valid);
  DecompositionData bad = *M2->decomp;
  bad.simplesLeft[0].mult = 1;
  ValidationReport r = validateDecomposition(*M2, bad);
  CHECK_FALSE(r.valid);
  bool multiplicityIssue = false;
  for (const auto& i : r.issues)
    if (i.axiom == "MultiplicityMismatch") multiplicityIssue = true;
  CHECK(multiplicityIssue);
}

TEST_CASE("injective-indecomposable isomorphism witness") {
  CoalgPtr D2 = buildDividedPower(2);
  Comodule regR = regularComodule(D2, Side::Right);
  Comodule regL = regularComodule(D2, Side::Left);
  auto w = isoInjectiveIndec(regR, dualComodule(regL));
  REQUIRE(w.has_value());
  CHECK(isComoduleMorphism(regR, dualComodule(regL), *w));
  CHECK(rank(*w) == regR.dim());
}

TEST_CASE("hom transpose pairing") {
  CoalgPtr D2 = buildDividedPower(2);
  Comodule regR = regularComodule(D2, Side::Right);
  Comodule regL = regularComodule(D2, Side::Left);
  auto hom1 = homBasis(regR, dualComodule(regL));
  auto hom2 = homBasis(regL, dualComodule(regR));
  CHECK(hom1.size() == hom2.size());
  REQUIRE_FALSE(hom1.empty());
  Matrix psi = lemmaTranspose(regR, regL, hom1[0]);
  CHECK(isComoduleMorphism(regL, dualComodule(regR), psi));
  CHECK(psi.transpose() == hom1[0]);
}

TEST_CASE("random graph decompositions validate") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 20; ++t) {
    GraphSpec G;
    std::uniform_int_distribution<int> nvD(1, 5), labelD(1, 2), neD(0, 8);
    int nv = nvD(rng);
    for (int i = 0; i < nv; ++i) G.vertices.push_back({"g" + std::to_string(i), labelD(rng)});
    std::uniform_int_distribution<int> vD(0, nv - 1);
    int ne = neD(rng);
    for (int k = 0; k < ne; ++k)
      G.edges.push_back(
          {"h" + std::to_string(k), G.vertices[vD(rng)].name, G.vertices[vD(rng)].name});
    CoalgPtr C = buildGraphCoalgebra(G);
    CHECK(validateCoalgebra(*C).valid);
    CHECK(validateDecomposition(*C, *C->decomp).valid);
  }
}

TEST_CASE("random comodules are valid and bounded") {
  std::mt19937_64 rng(99);
  for (CoalgPtr C : {buildMatrixCoalgebra(2), buildDividedPower(3), buildPrimitivesFan(2)}) {
    for (int t = 0; t < 10; ++t) {
      Comodule M = randomComodule(rng, C, t % 2 ? Side::Right : Side::Left, 5);
      CHECK(M.dim() >= 1);
      CHECK(M.dim() <= 5);
      CHECK(validateComodule(M).valid);
    }
  }
}
