#include "cofrob/coalgebra.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace cofrob {

int Coalgebra::indexOf(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (basisNames[i] == name) return i;
  throw Error("UnknownBasisElement", name);
}

bool sameCoalgebra(const Coalgebra& a, const Coalgebra& b) {
  if (&a == &b) return true;
  if (a.dim() != b.dim() || !a.field->same(*b.field)) return false;
  if (a.basisNames != b.basisNames) return false;
  for (int k = 0; k < a.dim(); ++k) {
    std::map<std::pair<int, int>, Scalar> da, db;
    for (const auto& t : a.delta[k]) {
      auto [it, fresh] = da.try_emplace({t.left, t.right}, t.c);
      if (!fresh) it->second += t.c;
    }
    for (const auto& t : b.delta[k]) {
      auto [it, fresh] = db.try_emplace({t.left, t.right}, t.c);
      if (!fresh) it->second += t.c;
    }
    for (const auto& [ij, c] : da) {
      auto it = db.find(ij);
      if (it == db.end() ? !c.isZero() : c != it->second) return false;
    }
    for (const auto& [ij, c] : db)
      if (!da.count(ij) && !c.isZero()) return false;
    if (a.epsilon[k] != b.epsilon[k]) return false;
  }
  return true;
}

ValidationReport validateCoalgebra(const Coalgebra& C) {
  ValidationReport rep;
  int n = C.dim();
  if (static_cast<int>(C.delta.size()) != n || static_cast<int>(C.epsilon.size()) != n)
    throw Error("IndexOutOfRange", "delta/epsilon size mismatch with basis");
  for (int k = 0; k < n; ++k)
    for (const auto& t : C.delta[k])
      if (t.left < 0 || t.left >= n || t.right < 0 || t.right >= n)
        throw Error("IndexOutOfRange", "delta term on " + C.basisNames[k]);

  for (int k = 0; k < n; ++k) {
    // coassociativity on b_k, computed as sparse 3-tensors
    std::map<std::tuple<int, int, int>, Scalar> lhs, rhs;
    for (const auto& t : C.delta[k]) {
      for (const auto& u : C.delta[t.left]) {  // (Delta (x) id) Delta
        auto key = std::make_tuple(u.left, u.right, t.right);
        auto [it, fresh] = lhs.try_emplace(key, t.c * u.c);
        if (!fresh) it->second += t.c * u.c;
      }
      for (const auto& u : C.delta[t.right]) {  // (id (x) Delta) Delta
        auto key = std::make_tuple(t.left, u.left, u.right);
        auto [it, fresh] = rhs.try_emplace(key, t.c * u.c);
        if (!fresh) it->second += t.c * u.c;
      }
    }
    bool ok = true;
    for (const auto& [key, c] : lhs) {
      auto it = rhs.find(key);
      if (it == rhs.end() ? !c.isZero() : c != it->second) ok = false;
    }
    for (const auto& [key, c] : rhs)
      if (!lhs.count(key) && !c.isZero()) ok = false;
    if (!ok) rep.fail("coassociativity", C.basisNames[k]);

    // counit on both sides
    Vec left = vecZero(C.field, n), right = vecZero(C.field, n);
    for (const auto& t : C.delta[k]) {
      left[t.right] += C.epsilon[t.left] * t.c;
      right[t.left] += C.epsilon[t.right] * t.c;
    }
    Vec unitK = vecZero(C.field, n);
    unitK[k] = Scalar::one(C.field);
    if (!vecEq(left, unitK)) rep.fail("counit", C.basisNames[k], "(eps (x) id) Delta != id");
    if (!vecEq(right, unitK)) rep.fail("counit", C.basisNames[k], "(id (x) eps) Delta != id");
  }
  return rep;
}

// ---------------------------------------------------------------- dual algebra

Vec DualAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec r = vecZero(field, dim);
  for (int i = 0; i < dim; ++i) {
    if (a[i].isZero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].isZero()) continue;
      auto it = mult.find({i, j});
      if (it == mult.end()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [k, s] : it->second) r[k] += c * s;
    }
  }
  return r;
}

Matrix DualAlgebra::leftMult(const Vec& a) const {
  Matrix L(field, dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec ej = vecZero(field, dim);
    ej[j] = Scalar::one(field);
    Vec col = multiply(a, ej);
    for (int i = 0; i < dim; ++i) L.at(i, j) = col[i];
  }
  return L;
}

namespace {

DualAlgebra computeDual(const Coalgebra& C) {
  DualAlgebra D;
  D.field = C.field;
  D.dim = C.dim();
  D.unit = C.epsilon;
  for (int k = 0; k < C.dim(); ++k)
    for (const auto& t : C.delta[k]) {
      auto& lst = D.mult[{t.left, t.right}];
      bool merged = false;
      for (auto& [kk, s] : lst)
        if (kk == k) {
          s += t.c;
          merged = true;
          break;
        }
      if (!merged) lst.emplace_back(k, t.c);
    }
  // drop exact zeros
  for (auto it = D.mult.begin(); it != D.mult.end();) {
    auto& lst = it->second;
    lst.erase(std::remove_if(lst.begin(), lst.end(),
                             [](const auto& p) { return p.second.isZero(); }),
              lst.end());
    it = lst.empty() ? D.mult.erase(it) : std::next(it);
  }

  // validation: associativity over candidate triples, unit law everywhere
  auto sparseMul = [&](int i, int j) -> const std::vector<std::pair<int, Scalar>>* {
    auto it = D.mult.find({i, j});
    return it == D.mult.end() ? nullptr : &it->second;
  };
  std::set<std::tuple<int, int, int>> candidates;
  for (const auto& [ij, lst] : D.mult) {
    for (int k = 0; k < D.dim; ++k) {
      candidates.insert({ij.first, ij.second, k});
      candidates.insert({k, ij.first, ij.second});
    }
  }
  for (const auto& [i, j, k] : candidates) {
    Vec lhs = vecZero(D.field, D.dim), rhs = vecZero(D.field, D.dim);
    if (auto* p = sparseMul(i, j))
      for (const auto& [m, c] : *p)
        if (auto* q = sparseMul(m, k))
          for (const auto& [t, d] : *q) lhs[t] += c * d;
    if (auto* p = sparseMul(j, k))
      for (const auto& [m, c] : *p)
        if (auto* q = sparseMul(i, m))
          for (const auto& [t, d] : *q) rhs[t] += c * d;
    if (!vecEq(lhs, rhs))
      throw Error("NotAssociative", "convolution product failed associativity (coalgebra not "
                                    "coassociative?)");
  }
  for (int j = 0; j < D.dim; ++j) {
    Vec ej = vecZero(D.field, D.dim);
    ej[j] = Scalar::one(D.field);
    if (!vecEq(D.multiply(D.unit, ej), ej) || !vecEq(D.multiply(ej, D.unit), ej))
      throw Error("NoUnit", "epsilon is not a unit for the convolution product");
  }
  return D;
}

}  // namespace

const DualAlgebra& dualAlgebra(const Coalgebra& C) {
  auto& cache = *C.cache;
  std::lock_guard<std::mutex> lock(cache.m);
  if (!cache.dual) cache.dual = std::make_shared<const DualAlgebra>(computeDual(C));
  return *cache.dual;
}

Scalar evalFunctional(const Vec& f, const Vec& c) { return dot(f, c); }

// ---------------------------------------------------------------- builders

CoalgPtr buildMatrixCoalgebra(int n, FieldPtr field) {
  if (n < 1) throw Error("BadArgument", "matrix coalgebra needs n >= 1");
  auto C = std::make_shared<Coalgebra>();
  C->field = field;
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      C->basisNames.push_back("e_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  C->delta.resize(n * n);
  C->epsilon = vecZero(field, n * n);
  Scalar one = Scalar::one(field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) C->delta[idx(i, j)].push_back({idx(i, k), idx(k, j), one});
      if (i == j) C->epsilon[idx(i, j)] = one;
    }
  DecompositionData D;
  auto unitVec = [&](int k) {
    Vec v = vecZero(field, n * n);
    v[k] = one;
    return v;
  };
  SimpleType right;  // row 1
  for (int j = 0; j < n; ++j) right.basis.push_back(unitVec(idx(0, j)));
  right.mult = n;
  D.simplesRight.push_back(right);
  SimpleType left;  // column 1
  for (int i = 0; i < n; ++i) left.basis.push_back(unitVec(idx(i, 0)));
  left.mult = n;
  D.simplesLeft.push_back(left);
  for (int i = 0; i < n; ++i) {
    InjectiveCopy row;
    for (int j = 0; j < n; ++j) row.basis.push_back(unitVec(idx(i, j)));
    D.injectivesRight.push_back(row);
  }
  for (int j = 0; j < n; ++j) {
    InjectiveCopy col;
    for (int i = 0; i < n; ++i) col.basis.push_back(unitVec(idx(i, j)));
    D.injectivesLeft.push_back(col);
  }
  C->decomp = std::move(D);
  return C;
}

CoalgPtr buildDividedPower(int n, FieldPtr field) {
  if (n < 0) throw Error("BadArgument", "divided power needs n >= 0");
  auto C = std::make_shared<Coalgebra>();
  C->field = field;
  for (int k = 0; k <= n; ++k) C->basisNames.push_back("c_" + std::to_string(k));
  C->delta.resize(n + 1);
  C->epsilon = vecZero(field, n + 1);
  Scalar one = Scalar::one(field);
  C->epsilon[0] = one;
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i <= k; ++i) C->delta[k].push_back({i, k - i, one});
  DecompositionData D;
  Vec c0 = vecZero(field, n + 1);
  c0[0] = one;
  D.simplesLeft.push_back({{c0}, 1});
  D.simplesRight.push_back({{c0}, 1});
  InjectiveCopy whole;
  for (int k = 0; k <= n; ++k) {
    Vec v = vecZero(field, n + 1);
    v[k] = one;
    whole.basis.push_back(v);
  }
  D.injectivesLeft.push_back(whole);
  D.injectivesRight.push_back(whole);
  C->decomp = std::move(D);
  return C;
}

CoalgPtr buildPrimitivesFan(int n, FieldPtr field) {
  if (n < 0) throw Error("BadArgument", "primitives fan needs n >= 0");
  auto C = std::make_shared<Coalgebra>();
  C->field = field;
  C->basisNames.push_back("g");
  for (int k = 1; k <= n; ++k) C->basisNames.push_back("c_" + std::to_string(k));
  int d = n + 1;
  C->delta.resize(d);
  C->epsilon = vecZero(field, d);
  Scalar one = Scalar::one(field);
  C->epsilon[0] = one;
  C->delta[0].push_back({0, 0, one});
  for (int k = 1; k <= n; ++k) {
    C->delta[k].push_back({0, k, one});
    C->delta[k].push_back({k, 0, one});
  }
  DecompositionData D;
  Vec g = vecZero(field, d);
  g[0] = one;
  D.simplesLeft.push_back({{g}, 1});
  D.simplesRight.push_back({{g}, 1});
  InjectiveCopy whole;
  for (int k = 0; k < d; ++k) {
    Vec v = vecZero(field, d);
    v[k] = one;
    whole.basis.push_back(v);
  }
  D.injectivesLeft.push_back(whole);
  D.injectivesRight.push_back(whole);
  C->decomp = std::move(D);
  return C;
}

CoalgPtr buildDualOfAlgebra(const AlgebraPresentation& A) {
  int n = A.dim();
  if (static_cast<int>(A.multTable.size()) != n || static_cast<int>(A.unit.size()) != n)
    throw Error("IndexOutOfRange", "algebra presentation shapes");
  auto mul = [&](const Vec& x, const Vec& y) {
    Vec r = vecZero(A.field, n);
    for (int i = 0; i < n; ++i) {
      if (x[i].isZero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j].isZero()) continue;
        Scalar c = x[i] * y[j];
        for (int k = 0; k < n; ++k) r[k] += c * A.multTable[i][j][k];
      }
    }
    return r;
  };
  auto basisVec = [&](int i) {
    Vec v = vecZero(A.field, n);
    v[i] = Scalar::one(A.field);
    return v;
  };
  for (int i = 0; i < n; ++i) {
    Vec bi = basisVec(i);
    if (!vecEq(mul(A.unit, bi), bi) || !vecEq(mul(bi, A.unit), bi))
      throw Error("NoUnit", "presented unit is not a two-sided unit");
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!vecEq(mul(mul(bi, basisVec(j)), basisVec(k)),
                   mul(bi, mul(basisVec(j), basisVec(k)))))
          throw Error("NotAssociative", "presented multiplication is not associative");
  }
  auto C = std::make_shared<Coalgebra>();
  C->field = A.field;
  for (const auto& name : A.basisNames) C->basisNames.push_back(name + "^*");
  C->delta.resize(n);
  C->epsilon = A.unit;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!A.multTable[i][j][k].isZero()) C->delta[k].push_back({i, j, A.multTable[i][j][k]});
  return C;
}

}  // namespace cofrob
