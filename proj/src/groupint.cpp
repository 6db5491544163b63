#include "cofrob/groupint.hpp"

#include <algorithm>
#include <numeric>

namespace cofrob {

int FiniteGroup::elementIndex(const std::string& name) const {
  for (int i = 0; i < order(); ++i)
    if (elements[i] == name) return i;
  throw Error("UnknownElement", name);
}

FiniteGroup makeGroup(std::vector<std::string> elements, std::vector<std::vector<int>> table) {
  FiniteGroup G;
  G.elements = std::move(elements);
  G.table = std::move(table);
  int n = G.order();
  if (static_cast<int>(G.table.size()) != n)
    throw Error("BadGroupTable", "table size differs from element count");
  for (const auto& row : G.table) {
    if (static_cast<int>(row.size()) != n) throw Error("BadGroupTable", "ragged table");
    for (int x : row)
      if (x < 0 || x >= n) throw Error("BadGroupTable", "index out of range");
  }
  int e = -1;
  for (int i = 0; i < n; ++i) {
    bool isId = true;
    for (int j = 0; j < n; ++j)
      if (G.table[i][j] != j || G.table[j][i] != j) isId = false;
    if (isId) {
      e = i;
      break;
    }
  }
  if (e < 0) throw Error("BadGroupTable", "no two-sided identity");
  G.identity = e;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.table[G.table[a][b]][c] != G.table[a][G.table[b][c]])
          throw Error("BadGroupTable", "associativity fails");
  G.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (G.table[a][b] == e && G.table[b][a] == e) G.inverse[a] = b;
    if (G.inverse[a] < 0) throw Error("BadGroupTable", G.elements[a] + " has no inverse");
  }
  return G;
}

void validateRepresentation(const Representation& eta) {
  const FiniteGroup& G = eta.group;
  if (static_cast<int>(eta.matrices.size()) != G.order())
    throw Error("NotARepresentation", "one matrix per group element required");
  int d = eta.dim();
  for (const auto& m : eta.matrices)
    if (m.rows != d || m.cols != d) throw Error("NotARepresentation", "non-square system");
  if (!(eta.matrices[G.identity] == Matrix::identity(eta.field, d)))
    throw Error("NotARepresentation", "identity does not map to id");
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      if (!(eta.matrices[a] * eta.matrices[b] == eta.matrices[G.table[a][b]]))
        throw Error("NotARepresentation",
                    "eta(" + G.elements[a] + " " + G.elements[b] + ") != eta(a)eta(b)");
}

CoalgPtr representativeCoalgebra(const FiniteGroup& G, FieldPtr field) {
  auto C = std::make_shared<Coalgebra>();
  C->field = field;
  int n = G.order();
  for (const auto& e : G.elements) C->basisNames.push_back("d_" + e);
  C->delta.resize(n);
  C->epsilon = vecZero(field, n);
  C->epsilon[G.identity] = Scalar::one(field);
  Scalar one = Scalar::one(field);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) C->delta[G.table[a][b]].push_back({a, b, one});
  return C;
}

namespace {

/// delta-basis coordinates of the matrix-coefficient function eta_ij.
Vec coefFunction(const Representation& eta, int i, int j) {
  Vec v = vecZero(eta.field, eta.group.order());
  for (int g = 0; g < eta.group.order(); ++g) v[g] = eta.matrices[g].at(i, j);
  return v;
}

}  // namespace

void attachGroupDecomposition(Coalgebra& C, const FiniteGroup& G,
                              const std::vector<Representation>& irreps) {
  int total = 0;
  for (const auto& r : irreps) total += r.dim() * r.dim();
  if (total != G.order())
    throw Error("DecompositionInvalid", "irreducible dimensions do not sum to |G|");
  DecompositionData D;
  for (size_t r = 0; r < irreps.size(); ++r) {
    const Representation& eta = irreps[r];
    int d = eta.dim();
    SimpleType right;  // row 0 of the coefficient block
    for (int j = 0; j < d; ++j) right.basis.push_back(coefFunction(eta, 0, j));
    right.mult = d;
    D.simplesRight.push_back(right);
    SimpleType left;  // column 0
    for (int i = 0; i < d; ++i) left.basis.push_back(coefFunction(eta, i, 0));
    left.mult = d;
    D.simplesLeft.push_back(left);
    for (int i = 0; i < d; ++i) {
      InjectiveCopy row;
      for (int j = 0; j < d; ++j) row.basis.push_back(coefFunction(eta, i, j));
      row.simpleIndex = static_cast<int>(r);
      D.injectivesRight.push_back(std::move(row));
    }
    for (int j = 0; j < d; ++j) {
      InjectiveCopy col;
      for (int i = 0; i < d; ++i) col.basis.push_back(coefFunction(eta, i, j));
      col.simpleIndex = static_cast<int>(r);
      D.injectivesLeft.push_back(std::move(col));
    }
  }
  C.decomp = std::move(D);
}

Comodule repToComodule(const CoalgPtr& RG, const Representation& eta) {
  validateRepresentation(eta);
  const FiniteGroup& G = eta.group;
  if (RG->dim() != G.order()) throw Error("CoalgebraMismatch", "coalgebra is not R(G)");
  int d = eta.dim();
  Comodule M;
  M.side = Side::Right;
  M.coalg = RG;
  for (int i = 0; i < d; ++i) M.basisNames.push_back("v" + std::to_string(i));
  M.rho.resize(d);
  // rho(v_i) = sum_j v_j (x) eta_ji makes delta_g act as eta(g)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int g = 0; g < G.order(); ++g) {
        Scalar c = eta.matrices[g].at(j, i);
        if (!c.isZero()) M.rho[i].push_back({j, g, c});
      }
  auto rep = validateComodule(M);
  if (!rep.valid) throw Error("NotARepresentation", "induced coaction fails comodule axioms");
  return M;
}

Representation comoduleToRep(const FiniteGroup& G, const Comodule& M) {
  if (M.side != Side::Right) throw Error("SideMismatch", "dictionary expects right comodules");
  if (M.coalg->dim() != G.order()) throw Error("CoalgebraMismatch", "coalgebra is not R(G)");
  Representation eta;
  eta.group = G;
  eta.field = M.field();
  for (int g = 0; g < G.order(); ++g) {
    Matrix m(eta.field, M.dim(), M.dim());
    Vec dg = vecZero(eta.field, G.order());
    dg[g] = Scalar::one(eta.field);
    for (int a = 0; a < M.dim(); ++a) {
      Vec ea = vecZero(eta.field, M.dim());
      ea[a] = Scalar::one(eta.field);
      Vec col = cstarAction(M, dg, ea);
      for (int i = 0; i < M.dim(); ++i) m.at(i, a) = col[i];
    }
    eta.matrices.push_back(std::move(m));
  }
  validateRepresentation(eta);
  return eta;
}

Vec haarFunctional(const FiniteGroup& G, const FieldPtr& field, bool normalized) {
  Scalar w = Scalar::one(field);
  if (normalized) {
    Scalar ord = Scalar::fromInt(field, G.order());
    if (ord.isZero())
      throw Error("CharacteristicDividesOrder", "cannot normalize by |G| = " +
                                                    std::to_string(G.order()));
    w = ord.inverse();
  }
  Vec h(G.order(), w);
  return h;
}

Matrix quantumIntegralH(const Representation& eta, const Vec& v) {
  const FiniteGroup& G = eta.group;
  if (static_cast<int>(v.size()) != eta.dim()) throw Error("DimensionMismatch", "vector size");
  Scalar ord = Scalar::fromInt(eta.field, G.order());
  if (ord.isZero()) throw Error("CharacteristicDividesOrder", "Haar normalization impossible");
  Scalar w = ord.inverse();
  Matrix L(eta.field, eta.dim(), G.order());
  for (int g = 0; g < G.order(); ++g) {
    // Lambda(delta_g) = (1/|G|) eta(g^{-1}) v
    Vec col = eta.matrices[G.inverse[g]].apply(v);
    for (int i = 0; i < eta.dim(); ++i) L.at(i, g) = w * col[i];
  }
  return L;
}

Vec thetaEta(const Representation& eta, const Matrix& lambda) {
  const FiniteGroup& G = eta.group;
  if (lambda.cols != G.order() || lambda.rows != eta.dim())
    throw Error("DimensionMismatch", "lambda must be dim V x |G|");
  Vec out = vecZero(eta.field, eta.dim());
  for (int i = 0; i < eta.dim(); ++i)
    for (int j = 0; j < eta.dim(); ++j)
      for (int g = 0; g < G.order(); ++g)
        out[i] += lambda.at(j, g) * eta.matrices[g].at(i, j);
  return out;
}

bool quantumInvarianceCheck(const Representation& eta, const Matrix& lambda) {
  const FiniteGroup& G = eta.group;
  if (lambda.cols != G.order() || lambda.rows != eta.dim())
    throw Error("DimensionMismatch", "lambda must be dim V x |G|");
  // (y.f)(x) = f(xy), so x.delta_g = delta_{g x^{-1}}
  for (int x = 0; x < G.order(); ++x)
    for (int g = 0; g < G.order(); ++g) {
      int shifted = G.table[g][G.inverse[x]];
      Vec lhs = lambda.col(shifted);
      Vec rhs = eta.matrices[x].apply(lambda.col(g));
      if (!vecEq(lhs, rhs)) return false;
    }
  return true;
}

IntegralSpace intEtaSpace(const CoalgPtr& RG, const Representation& eta) {
  return leftIntegrals(RG, repToComodule(RG, eta));
}

bool inIntegralSpace(const IntegralSpace& sp, const Matrix& lambda) {
  std::vector<Vec> flat;
  for (const auto& b : sp.basis) flat.push_back(b.a);
  return coordinatesIn(flat, lambda.a, lambda.field).has_value();
}

IntegralSpace hopfIntegralSpace(const CoalgPtr& C, const Vec& unit) {
  if (static_cast<int>(unit.size()) != C->dim()) throw Error("InvalidUnit", "unit size");
  Comodule M;
  M.side = Side::Right;
  M.coalg = C;
  M.basisNames = {"1"};
  M.rho.resize(1);
  for (int k = 0; k < C->dim(); ++k)
    if (!unit[k].isZero()) M.rho[0].push_back({0, k, unit[k]});
  if (!validateComodule(M).valid)
    throw Error("InvalidUnit", "1 -> 1 (x) unit is not a comodule coaction");
  return leftIntegrals(C, M);
}

// ---------------------------------------------------------------- catalog

namespace {

FiniteGroup cyclicGroup(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return makeGroup(std::move(names), std::move(t));
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // (a o b)(x) = a(b(x))
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

int permSign(Perm p) {
  int sgn = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sgn = -sgn;
  return sgn;
}

struct S3Data {
  FiniteGroup group;
  std::vector<Perm> perms;
};

S3Data symmetric3() {
  Perm id{0, 1, 2}, r{1, 2, 0}, s{1, 0, 2};
  std::vector<Perm> perms{id, r, compose(r, r), s, compose(r, s), compose(compose(r, r), s)};
  std::vector<std::string> names{"e", "r", "r2", "s", "rs", "r2s"};
  int n = 6;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Perm p = compose(perms[a], perms[b]);
      int idx = -1;
      for (int k = 0; k < n; ++k)
        if (perms[k] == p) idx = k;
      t[a][b] = idx;
    }
  return {makeGroup(std::move(names), std::move(t)), std::move(perms)};
}

Representation regularRep(const FiniteGroup& G, const FieldPtr& f) {
  Representation eta;
  eta.group = G;
  eta.field = f;
  for (int g = 0; g < G.order(); ++g) {
    Matrix m(f, G.order(), G.order());
    for (int h = 0; h < G.order(); ++h) m.at(G.table[g][h], h) = Scalar::one(f);
    eta.matrices.push_back(std::move(m));
  }
  return eta;
}

Representation characterRep(const FiniteGroup& G, const FieldPtr& f,
                            const std::vector<Scalar>& values) {
  Representation eta;
  eta.group = G;
  eta.field = f;
  for (int g = 0; g < G.order(); ++g) {
    Matrix m(f, 1, 1);
    m.at(0, 0) = values[g];
    eta.matrices.push_back(std::move(m));
  }
  return eta;
}

Representation permMatrixRep(const FiniteGroup& G, const FieldPtr& f,
                             const std::vector<Perm>& perms) {
  Representation eta;
  eta.group = G;
  eta.field = f;
  int d = static_cast<int>(perms[0].size());
  for (int g = 0; g < G.order(); ++g) {
    Matrix m(f, d, d);
    for (int i = 0; i < d; ++i) m.at(perms[g][i], i) = Scalar::one(f);
    eta.matrices.push_back(std::move(m));
  }
  return eta;
}

/// Standard 2-dim representation on {x : x_0+x_1+x_2 = 0}, basis e0-e1, e1-e2.
Representation standardRep(const FiniteGroup& G, const FieldPtr& f,
                           const std::vector<Perm>& perms) {
  Representation eta;
  eta.group = G;
  eta.field = f;
  // coordinates of e_i in the basis (e0-e1, e1-e2) modulo e0+e1+e2
  // e0 = ( 2/3, 1/3), e1 = (-1/3, 1/3), e2 = (-1/3, -2/3) -- differences only
  // are needed: sigma(e_i - e_j) = e_{sigma i} - e_{sigma j}
  auto diffCoords = [&](int i, int j) {  // e_i - e_j in the basis
    Vec v = vecZero(f, 2);
    auto addE = [&](int k, int sign) {
      // e0 -> b1-part only through differences; use e_k - e_2 = b1+b2 (k=0),
      // b2 (k=1), 0 (k=2)
      Scalar s = Scalar::fromInt(f, sign);
      if (k == 0) {
        v[0] += s;
        v[1] += s;
      } else if (k == 1) {
        v[1] += s;
      }
    };
    addE(i, 1);
    addE(j, -1);
    return v;
  };
  for (int g = 0; g < G.order(); ++g) {
    Matrix m(f, 2, 2);
    const Perm& p = perms[g];
    Vec c0 = diffCoords(p[0], p[1]);  // image of b1 = e0 - e1
    Vec c1 = diffCoords(p[1], p[2]);  // image of b2 = e1 - e2
    for (int i = 0; i < 2; ++i) {
      m.at(i, 0) = c0[i];
      m.at(i, 1) = c1[i];
    }
    eta.matrices.push_back(std::move(m));
  }
  return eta;
}

Scalar rootOfUnity(const FieldPtr& f, int n) {
  if (n == 1) return Scalar::one(f);
  if (n == 2) return Scalar::fromInt(f, -1);
  // generator of the extension
  std::vector<Scalar> c(2, Scalar::zero(f->base));
  c[1] = Scalar::one(f->base);
  return Scalar::fromCoeffs(f, c);
}

}  // namespace

std::vector<std::string> groupCatalogNames() { return {"Z2", "Z3", "Z4", "S3"}; }

CatalogEntry groupCatalog(const std::string& name) {
  CatalogEntry cat;
  if (name == "Z2" || name == "Z3" || name == "Z4") {
    int n = name[1] - '0';
    cat.group = cyclicGroup(n);
    auto Q = Field::rational();
    if (n == 2) {
      cat.field = Q;
    } else if (n == 3) {
      // Q[t]/(t^2 + t + 1), t a primitive cube root of unity
      cat.field = Field::extension(
          Q, {Scalar::one(Q), Scalar::one(Q), Scalar::one(Q)}, "w");
    } else {
      // Q[i]
      cat.field = Field::extension(
          Q, {Scalar::one(Q), Scalar::zero(Q), Scalar::one(Q)}, "i");
    }
    for (int k = 0; k < n; ++k) cat.repNames.push_back("chi" + std::to_string(k));
    cat.irrepCount = n;
    cat.repNames.push_back("regular");
  } else if (name == "S3") {
    cat.group = symmetric3().group;
    cat.field = Field::rational();
    cat.repNames = {"trivial", "sign", "std", "perm", "regular"};
    cat.irrepCount = 3;
  } else {
    throw Error("UnknownGroup", name);
  }
  return cat;
}

Representation CatalogEntry::rep(const std::string& name) const {
  int n = group.order();
  if (name == "regular") {
    auto eta = regularRep(group, field);
    validateRepresentation(eta);
    return eta;
  }
  if (n != 6) {  // cyclic
    if (name.rfind("chi", 0) == 0) {
      int k = std::stoi(name.substr(3));
      Scalar w = rootOfUnity(field, n);
      std::vector<Scalar> vals;
      for (int j = 0; j < n; ++j) {
        Scalar x = Scalar::one(field);
        for (int t = 0; t < (k * j) % n; ++t) x *= w;
        vals.push_back(x);
      }
      auto eta = characterRep(group, field, vals);
      validateRepresentation(eta);
      return eta;
    }
  } else {
    S3Data s3 = symmetric3();
    Representation eta;
    if (name == "trivial")
      eta = characterRep(group, field, std::vector<Scalar>(6, Scalar::one(field)));
    else if (name == "sign") {
      std::vector<Scalar> vals;
      for (const auto& p : s3.perms) vals.push_back(Scalar::fromInt(field, permSign(p)));
      eta = characterRep(group, field, vals);
    } else if (name == "std")
      eta = standardRep(group, field, s3.perms);
    else if (name == "perm")
      eta = permMatrixRep(group, field, s3.perms);
    else
      throw Error("UnknownRepresentation", name);
    validateRepresentation(eta);
    return eta;
  }
  throw Error("UnknownRepresentation", name);
}

}  // namespace cofrob
