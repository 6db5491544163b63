#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cofrob/json_io.hpp"
#include "doctest.h"

using namespace cofrob;

TEST_CASE("scalar strings round trip, including extension fields") {
  FieldPtr q = Field::rational();
  for (const char* s : {"0", "1", "-7/3", "22/7"}) {
    Scalar x = Scalar::parse(q, s);
    CHECK(Scalar::parse(q, x.str()) == x);
  }
  FieldPtr f5 = Field::prime(5);
  CHECK(Scalar::parse(f5, "7") == Scalar::fromInt(f5, 2));
  // Q(i) = Q[t]/(t^2+1)
  std::vector<Scalar> mp{Scalar::one(q), Scalar::zero(q), Scalar::one(q)};
  FieldPtr qi = Field::extension(q, mp, "i");
  Scalar z = Scalar::parse(qi, "[1/2,3]");  // 1/2 + 3i
  CHECK(Scalar::parse(qi, z.str()) == z);
  CHECK(z * Scalar::parse(qi, "[0,1]") == Scalar::parse(qi, "[-3,1/2]"));
}

TEST_CASE("field descriptions round trip") {
  for (FieldPtr f : {Field::rational(), Field::prime(7)}) {
    FieldPtr back = fieldFromJson(fieldToJson(f));
    CHECK(back->kind == f->kind);
  }
  Json ext = Json::parse(R"({"kind":"extension","base":{"kind":"rational"},
                             "minpoly":["1","0","1"],"var":"i"})");
  FieldPtr qi = fieldFromJson(ext);
  CHECK(qi->kind == Field::Kind::Extension);
  CHECK(fieldFromJson(fieldToJson(qi))->minpoly.size() == 3);
}

TEST_CASE("coalgebra json round trip keeps structure and decomposition") {
  for (CoalgPtr C : {buildMatrixCoalgebra(2), buildDividedPower(3), buildPrimitivesFan(2)}) {
    CoalgPtr back = coalgebraFromJson(coalgebraToJson(*C));
    CHECK(back->dim() == C->dim());
    CHECK(validateCoalgebra(*back).valid);
    REQUIRE(back->decomp.has_value());
    CHECK(validateDecomposition(*back, *back->decomp).valid);
    CHECK(coalgebraToJson(*back) == coalgebraToJson(*C));
  }
}

TEST_CASE("comodule json round trip") {
  CoalgPtr M2 = buildMatrixCoalgebra(2);
  Comodule reg = regularComodule(M2, Side::Right);
  Comodule back = comoduleFromJson(comoduleToJson(reg), M2);
  CHECK(validateComodule(back).valid);
  CHECK(comoduleToJson(back) == comoduleToJson(reg));
}

TEST_CASE("graph and group json round trips") {
  GraphSpec G = *exampleGallery("x-line-with-y", {2}).graph;
  GraphSpec back = graphFromJson(graphToJson(G));
  CHECK(graphToJson(back) == graphToJson(G));
  CHECK(back.vertices.size() == G.vertices.size());

  FiniteGroup S3 = groupCatalog("S3").group;
  FiniteGroup gback = groupFromJson(groupToJson(S3));
  CHECK(gback.table == S3.table);
  CHECK(gback.identity == S3.identity);
  CHECK(gback.inverse == S3.inverse);
}

TEST_CASE("representation json with an inline group") {
  CatalogEntry z2 = groupCatalog("Z2");
  Json j;
  j["group"] = groupToJson(z2.group);
  j["matrices"]["e"] = Json::array({Json::array({"1"})});
  j["matrices"]["g1"] = Json::array({Json::array({"-1"})});
  Representation eta = representationFromJson(j);
  CHECK(eta.dim() == 1);
  CHECK(eta.matrices[1].at(0, 0) == Scalar::fromInt(eta.field, -1));
}

TEST_CASE("file loading failures carry the parse-error kind") {
  CHECK_THROWS_WITH_AS(loadJsonFile("/nonexistent/nowhere.json"),
                       doctest::Contains("ParseError"), Error);
}
