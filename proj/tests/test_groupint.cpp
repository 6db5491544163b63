#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cofrob/frobenius.hpp"
#include "cofrob/groupint.hpp"
#include "doctest.h"

using namespace cofrob;

TEST_CASE("catalog groups: coalgebra, decomposition, verdicts, integrals") {
  for (const auto& gname : groupCatalogNames()) {
    CAPTURE(gname);
    CatalogEntry cat = groupCatalog(gname);
    CoalgPtr RG = representativeCoalgebra(cat.group, cat.field);
    CHECK(validateCoalgebra(*RG).valid);
    std::vector<Representation> irreps;
    for (int i = 0; i < cat.irrepCount; ++i) irreps.push_back(cat.rep(cat.repNames[i]));
    attachGroupDecomposition(*std::const_pointer_cast<Coalgebra>(RG), cat.group, irreps);
    CHECK(validateDecomposition(*RG, *RG->decomp).valid);
    Verdict V = verdicts(RG);
    CHECK(V.coFrobeniusLeft);
    CHECK(V.coFrobeniusRight);
    // cosemisimple: the coradical is everything
    CHECK(static_cast<int>(coradical(*RG).size()) == RG->dim());

    for (const auto& rname : cat.repNames) {
      CAPTURE(rname);
      Representation eta = cat.rep(rname);
      Comodule M = repToComodule(RG, eta);
      CHECK(validateComodule(M).valid);
      Representation back = comoduleToRep(cat.group, M);
      for (int g = 0; g < cat.group.order(); ++g) CHECK(back.matrices[g] == eta.matrices[g]);
      IntegralSpace sp = intEtaSpace(RG, eta);
      CHECK(sp.dim() == eta.dim());
      for (int i = 0; i < eta.dim(); ++i) {
        Vec v = vecZero(cat.field, eta.dim());
        v[i] = Scalar::one(cat.field);
        Matrix L = quantumIntegralH(eta, v);
        CHECK(quantumInvarianceCheck(eta, L));
        CHECK(vecEq(thetaEta(eta, L), v));
        CHECK(inIntegralSpace(sp, L));
      }
      for (const auto& b : sp.basis) CHECK(quantumInvarianceCheck(eta, b));
      CHECK(static_cast<int>(socle(M).size()) == M.dim());
    }

    // the Haar functional spans the integral space of the trivial comodule
    Vec haar = haarFunctional(cat.group, cat.field);
    Vec unit(RG->dim(), Scalar::one(cat.field));  // 1 = sum_g delta_g
    IntegralSpace hsp = hopfIntegralSpace(RG, unit);
    CHECK(hsp.dim() == 1);
    Matrix hm(cat.field, 1, RG->dim());
    for (int g = 0; g < RG->dim(); ++g) hm.at(0, g) = haar[g];
    CHECK(inIntegralSpace(hsp, hm));
  }
}

TEST_CASE("sign representation of Z2: the averaged integral by hand") {
  CatalogEntry z2 = groupCatalog("Z2");
  Representation eta = z2.rep("chi1");
  Vec v1(1, Scalar::one(z2.field));
  Matrix L = quantumIntegralH(eta, v1);
  CHECK(L.at(0, 0) == Scalar::fromRational(z2.field, mpq_class(1, 2)));
  CHECK(L.at(0, 1) == Scalar::fromRational(z2.field, mpq_class(-1, 2)));
}

TEST_CASE("standard representation of S3 is absolutely irreducible over Q") {
  CatalogEntry s3 = groupCatalog("S3");
  Representation stdrep = s3.rep("std");
  CHECK(stdrep.dim() == 2);
  Comodule M = repToComodule(representativeCoalgebra(s3.group, s3.field), stdrep);
  CHECK(homBasis(M, M).size() == 1);
}

TEST_CASE("bad inputs are rejected") {
  // a "table" that is not a group: constant rows have no identity
  CHECK_THROWS_WITH_AS(makeGroup({"a", "b"}, {{0, 0}, {0, 0}}),
                       doctest::Contains("BadGroupTable"), Error);
  CHECK_THROWS_WITH_AS(haarFunctional(groupCatalog("Z2").group, Field::prime(2)),
                       doctest::Contains("CharacteristicDividesOrder"), Error);
  // a non-multiplicative matrix assignment is not a representation
  CatalogEntry z2 = groupCatalog("Z2");
  Representation badRep = z2.rep("chi1");
  badRep.matrices[1].at(0, 0) = Scalar::fromInt(z2.field, 2);
  CHECK_THROWS_WITH_AS(validateRepresentation(badRep),
                       doctest::Contains("NotARepresentation"), Error);
}
