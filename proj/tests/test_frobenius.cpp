#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cofrob/corpus.hpp"
#include "doctest.h"

using namespace cofrob;

namespace {

const CorpusMember& member(const std::string& id) {
  for (const auto& m : corpusMembers())
    if (m.id == id) return m;
  throw Error("UnknownExample", id);
}

}  // namespace

TEST_CASE("comatrix coalgebras are co-Frobenius with verified embeddings") {
  Verdict v = verdicts(buildMatrixCoalgebra(2));
  CHECK(v.qcfLeft);
  CHECK(v.qcfRight);
  CHECK(v.coFrobeniusLeft);
  CHECK(v.coFrobeniusRight);
  CHECK(v.embeddingLeftVerified);
  CHECK(v.embeddingRightVerified);
  CHECK(v.sigmaLeft.total());
  REQUIRE(v.sigmaLeft.witness[0].has_value());
}

TEST_CASE("divided powers are co-Frobenius, primitive fans are not even QcF") {
  Verdict vd = verdicts(buildDividedPower(2));
  CHECK(vd.coFrobeniusLeft);
  CHECK(vd.coFrobeniusRight);
  Verdict vf = verdicts(buildPrimitivesFan(2));
  CHECK_FALSE(vf.qcfLeft);
  CHECK_FALSE(vf.qcfRight);
  CHECK_FALSE(vf.coFrobeniusLeft);
  CHECK_FALSE(vf.coFrobeniusRight);
  CHECK(vf.sigmaLeft.map[0] == -1);  // the certificate: no partner for the socle type
}

TEST_CASE("one-sided data on the triangular dual") {
  const CorpusMember& ut = member("ut2dual");
  Verdict v = verdicts(ut.coalg);
  CHECK_FALSE(v.qcfLeft);
  CHECK_FALSE(v.qcfRight);
  // sigma pairs the first right type but strands the second
  CHECK(v.sigmaLeft.map[0] == 1);
  CHECK(v.sigmaLeft.map[1] == -1);
}

TEST_CASE("QcF without co-Frobenius on the weighted two-cycle") {
  Verdict v = verdicts(member("cycle12").coalg);
  CHECK(v.qcfLeft);
  CHECK(v.qcfRight);
  CHECK_FALSE(v.coFrobeniusLeft);
  CHECK_FALSE(v.coFrobeniusRight);
}

TEST_CASE("summary identities") {
  SimpleSummary s = simpleSummary(buildMatrixCoalgebra(3));
  REQUIRE(s.right.size() == 1);
  CHECK(s.right[0].mult == 3);
  CHECK(s.right[0].dimension == 3);
  CHECK(s.dualOfRight[0] == 0);
  // tampered multiplicity trips the p(T) = n(T*) identity
  Coalgebra bad = *buildMatrixCoalgebra(3);
  bad.cache = std::make_shared<CoalgCache>();
  bad.decomp->simplesLeft[0].mult = 2;
  CHECK_THROWS_WITH_AS(simpleSummary(std::make_shared<const Coalgebra>(bad)),
                       doctest::Contains("DecompositionInvalid"), Error);
}

TEST_CASE("pointed criterion in the split QcF case") {
  PointedReport pr = pointedCriterion(buildMatrixCoalgebra(2));
  CHECK(pr.allLeq);
  for (const auto& r : pr.rows) CHECK(r.socDim == r.cosocDim);
  // not QcF -> refused
  CHECK_THROWS_WITH_AS(pointedCriterion(buildPrimitivesFan(2)), doctest::Contains("NotQcF"),
                       Error);
}
