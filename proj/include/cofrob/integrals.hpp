#pragma once

#include "cofrob/comodule.hpp"

namespace cofrob {

/// Morphism space from the regular comodule into a target comodule; the
/// "integral" space whose dimension the verdict theorems quantify.
struct IntegralSpace {
  Side side = Side::Left;  // left integrals target right comodules
  CoalgPtr coalg;
  std::vector<Matrix> basis;  // each (dim M) x (dim C), a comodule morphism
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Hom of right comodules from (C, Delta) to M.
IntegralSpace leftIntegrals(const CoalgPtr& C, const Comodule& M);

/// Hom of left comodules from (C, Delta) to N.
IntegralSpace rightIntegrals(const CoalgPtr& C, const Comodule& N);

/// (f . lambda)(c) = lambda(f(c_1) c_2) for left integrals; the result is
/// re-validated as a morphism and must stay in the computed span (NotInSpace).
Matrix integralAction(const IntegralSpace& sp, const Vec& f, const Matrix& lambda);

/// dim Hom_{C*}(M, C*) as left C*-modules: solve f(a -> m) = a * f(m).
int cstarDualDim(const Comodule& M);

}  // namespace cofrob
