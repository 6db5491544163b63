#include "cofrob/integrals.hpp"

namespace cofrob {

namespace {

IntegralSpace integrals(const CoalgPtr& C, const Comodule& M, Side side) {
  if (M.side != (side == Side::Left ? Side::Right : Side::Left))
    throw Error("SideMismatch", std::string(sideName(side)) +
                                    " integrals target " +
                                    sideName(mirror(side)) + " comodules");
  if (!sameCoalgebra(*C, *M.coalg)) throw Error("CoalgebraMismatch", "integrals");
  IntegralSpace sp;
  sp.side = side;
  sp.coalg = C;
  sp.basis = homBasis(regularComodule(C, M.side), M);
  return sp;
}

std::optional<Vec> coordsInMatrixSpan(const std::vector<Matrix>& basis, const Matrix& m) {
  std::vector<Vec> flat;
  for (const auto& b : basis) flat.push_back(b.a);
  return coordinatesIn(flat, m.a, m.field);
}

}  // namespace

IntegralSpace leftIntegrals(const CoalgPtr& C, const Comodule& M) {
  return integrals(C, M, Side::Left);
}

IntegralSpace rightIntegrals(const CoalgPtr& C, const Comodule& N) {
  return integrals(C, N, Side::Right);
}

Matrix integralAction(const IntegralSpace& sp, const Vec& f, const Matrix& lambda) {
  const Coalgebra& C = *sp.coalg;
  if (static_cast<int>(f.size()) != C.dim()) throw Error("DimensionMismatch", "functional size");
  if (!coordsInMatrixSpan(sp.basis, lambda))
    throw Error("NotInSpace", "lambda outside the integral space");
  // T_f(x_k) = sum f(x_1) x_2 (left integrals; mirrored for right)
  Matrix T(C.field, C.dim(), C.dim());
  for (int k = 0; k < C.dim(); ++k)
    for (const auto& t : C.delta[k]) {
      int paired = sp.side == Side::Left ? t.left : t.right;
      int kept = sp.side == Side::Left ? t.right : t.left;
      if (!f[paired].isZero()) T.at(kept, k) += t.c * f[paired];
    }
  Matrix result = lambda * T;
  // closure: the action must stay inside the computed span
  if (!coordsInMatrixSpan(sp.basis, result))
    throw Error("NotInSpace", "action left the integral space");
  return result;
}

int cstarDualDim(const Comodule& M) {
  if (M.side != Side::Right) throw Error("SideMismatch", "cstarDualDim expects a right comodule");
  const Coalgebra& C = *M.coalg;
  const DualAlgebra& A = dualAlgebra(C);
  int dm = M.dim(), dc = C.dim();
  // unknown f(m_a) = sum_k F[k][a] x_k*, column index k*dm + a
  SparseSystem sys(C.field, dc * dm);
  for (int i = 0; i < dc; ++i)
    for (int a = 0; a < dm; ++a) {
      std::map<int, std::map<int, Scalar>> rows;  // target dual index l
      for (const auto& t : M.rho[a]) {
        if (t.co != i) continue;
        for (int l = 0; l < dc; ++l) {
          auto& cell = rows[l][l * dm + t.mod];
          cell = (cell.field() ? cell : Scalar::zero(C.field)) + t.c;
        }
      }
      for (int k = 0; k < dc; ++k) {
        auto it = A.mult.find({i, k});
        if (it == A.mult.end()) continue;
        for (const auto& [l, c] : it->second) {
          auto& cell = rows[l][k * dm + a];
          cell = (cell.field() ? cell : Scalar::zero(C.field)) - c;
        }
      }
      for (const auto& [l, row] : rows) sys.addRow(row);
    }
  return static_cast<int>(sys.kernel().size());
}

}  // namespace cofrob
