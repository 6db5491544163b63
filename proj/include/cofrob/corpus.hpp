#pragma once

#include <cstdint>
#include <set>

#include "cofrob/frobenius.hpp"
#include "cofrob/graphcoalg.hpp"
#include "cofrob/groupint.hpp"
#include "cofrob/json_io.hpp"

namespace cofrob {

/// One built-in verification target. Window members are finite truncations of
/// infinite families; their boundary blocks distort the verdict, so sampling
/// for the bound criteria is restricted to interior injective copies.
struct CorpusMember {
  std::string id, description;
  CoalgPtr coalg;
  std::optional<GraphSpec> graph;
  bool window = false;
  bool positive = false;     // expected co-Frobenius on both sides
  bool boundFilter = false;  // participates in the uniqueness/existence sampling
  std::set<std::string> interiorVertices;  // windows: sampling pool by socle vertex
  int witnessRightSimple = -1;  // negatives: right simple with dim integral != dim
};

const std::vector<CorpusMember>& corpusMembers();

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CorpusReport {
  bool allPass = false;
  std::vector<CriterionResult> criteria;
  Json json;
};

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Runs verification criteria 1-10 over the corpus; with `checkDeterminism` a
/// second identical pass must serialize byte-for-byte (criterion 11). The
/// emitted json carries no timing or environment data, so equal seeds give
/// equal bytes.
CorpusReport runCorpus(std::uint64_t seed = kDefaultSeed, bool checkDeterminism = true);

}  // namespace cofrob
