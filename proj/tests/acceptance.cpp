// Runs the built-in corpus and prints one line per acceptance criterion.
#include <cstdio>

#include "cofrob/corpus.hpp"

int main() {
  cofrob::CorpusReport report = cofrob::runCorpus(cofrob::kDefaultSeed, /*checkDeterminism=*/true);
  for (const auto& c : report.criteria)
    std::printf("[%s] criterion %2d: %s — %s\n", c.pass ? "PASS" : "FAIL", c.number,
                c.name.c_str(), c.detail.c_str());
  std::printf("%s\n", report.allPass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return report.allPass ? 0 : 1;
}
