#include "cofrob/random_gen.hpp"

namespace cofrob {

Vec randomVec(std::mt19937_64& rng, const FieldPtr& f, int n) {
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int tries = 0; tries < 64; ++tries) {
    Vec v = vecZero(f, n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      int c = coef(rng);
      if (c != 0) nonzero = true;
      v[i] = Scalar::fromInt(f, c);
    }
    if (nonzero) return v;
  }
  Vec v = vecZero(f, n);
  v[0] = Scalar::one(f);
  return v;
}

Comodule randomComodule(std::mt19937_64& rng, const CoalgPtr& C, Side side, int maxDim,
                        const std::vector<int>& allowedInjectives) {
  if (!C->decomp) throw Error("DecompositionInvalid", "random sampling needs decomposition data");
  const auto& injectives =
      side == Side::Right ? C->decomp->injectivesRight : C->decomp->injectivesLeft;
  std::vector<int> pool = allowedInjectives;
  if (pool.empty())
    for (size_t i = 0; i < injectives.size(); ++i) pool.push_back(static_cast<int>(i));
  Comodule reg = regularComodule(C, side);
  std::uniform_int_distribution<int> pickCount(1, 2);
  std::uniform_int_distribution<size_t> pickCopy(0, pool.size() - 1);

  for (int attempt = 0; attempt < 32; ++attempt) {
    // ambient: direct sum of one or two injective copies
    Comodule amb = restrictComodule(reg, injectives[pool[pickCopy(rng)]].basis);
    if (pickCount(rng) == 2)
      amb = directSum(amb, restrictComodule(reg, injectives[pool[pickCopy(rng)]].basis));
    // random generated subcomodule
    std::vector<Vec> seeds;
    int nSeeds = pickCount(rng);
    for (int s = 0; s < nSeeds; ++s) seeds.push_back(randomVec(rng, C->field, amb.dim()));
    std::vector<Vec> span = generatedSubcomodule(amb, seeds);
    if (span.empty()) continue;
    Comodule M = restrictComodule(amb, span);
    // sometimes pass to a quotient by a generated subcomodule
    if (pickCount(rng) == 2 && M.dim() > 1) {
      std::vector<Vec> q = generatedSubcomodule(M, {randomVec(rng, C->field, M.dim())});
      if (static_cast<int>(q.size()) < M.dim()) M = quotientComodule(M, q).quot;
    }
    if (M.dim() >= 1 && M.dim() <= maxDim) return M;
  }
  // deterministic fallback: the socle of the first allowed copy is small
  Comodule amb = restrictComodule(reg, injectives[pool[0]].basis);
  Comodule M = restrictComodule(amb, socle(amb));
  if (M.dim() > maxDim) throw Error("InternalCheckFailed", "cannot sample a small comodule");
  return M;
}

}  // namespace cofrob
