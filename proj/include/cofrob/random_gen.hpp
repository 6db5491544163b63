#pragma once

#include <random>

#include "cofrob/comodule.hpp"

namespace cofrob {

/// Random finite-dimensional comodules drawn as subquotients of direct sums of
/// injective copies of C. `allowedInjectives` restricts which copies seed the
/// sample (windows of infinite families expose only their interior blocks);
/// empty means all. Always returns a validated nonzero comodule of dim <= maxDim.
Comodule randomComodule(std::mt19937_64& rng, const CoalgPtr& C, Side side, int maxDim,
                        const std::vector<int>& allowedInjectives = {});

/// Uniform small-integer vector (entries in [-2, 2], not all zero).
Vec randomVec(std::mt19937_64& rng, const FieldPtr& f, int n);

}  // namespace cofrob
