#include "cofrob/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cofrob {

namespace {

// Gauss-Jordan with field division. The row-update loop is the data-parallel
// hot spot; `parallel` switches the OpenMP kernel on.
Echelon gaussJordan(Matrix A, bool parallel) {
  Echelon e;
  int m = A.rows, n = A.cols;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i)
      if (!A.at(i, c).isZero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < n; ++j) std::swap(A.at(r, j), A.at(pr, j));
    Scalar inv = A.at(r, c).inverse();
    for (int j = c; j < n; ++j) A.at(r, j) *= inv;
    if (parallel && m >= 48) {
#pragma omp parallel for schedule(dynamic, 8)
      for (int i = 0; i < m; ++i) {
        if (i == r || A.at(i, c).isZero()) continue;
        Scalar f = A.at(i, c);
        for (int j = c; j < n; ++j) A.at(i, j) -= f * A.at(r, j);
      }
    } else {
      for (int i = 0; i < m; ++i) {
        if (i == r || A.at(i, c).isZero()) continue;
        Scalar f = A.at(i, c);
        for (int j = c; j < n; ++j) A.at(i, j) -= f * A.at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(A);
  e.pivots = std::move(pivots);
  e.rank = r;
  return e;
}

// Fraction-free Bareiss forward elimination on an integer lift, then a rational
// back-substitution pass to reach the canonical RREF. Keeps intermediate
// entries as minors of the integer matrix, which bounds coefficient growth.
Echelon bareissRref(const Matrix& A) {
  int m = A.rows, n = A.cols;
  std::vector<std::vector<mpz_class>> Z(m, std::vector<mpz_class>(n));
  for (int i = 0; i < m; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, A.at(i, j).rat().get_den());
    for (int j = 0; j < n; ++j) Z[i][j] = mpz_class(A.at(i, j).rat() * l);
  }
  std::vector<int> pivots;
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i)
      if (Z[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) std::swap(Z[r], Z[pr]);
#pragma omp parallel for schedule(dynamic, 8) if (m - r > 48)
    for (int i = r + 1; i < m; ++i) {
      mpz_class t;
      for (int j = c + 1; j < n; ++j) {
        t = Z[r][c] * Z[i][j] - Z[i][c] * Z[r][j];
        mpz_divexact(Z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      Z[i][c] = 0;
    }
    prev = Z[r][c];
    pivots.push_back(c);
    ++r;
  }
  // rational back-substitution on the echelon rows
  FieldPtr f = A.field;
  Matrix R(f, m, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) R.at(i, j) = Scalar::fromRational(f, mpq_class(Z[i][j]));
  for (int i = r - 1; i >= 0; --i) {
    int pc = pivots[i];
    Scalar inv = R.at(i, pc).inverse();
    for (int j = pc; j < n; ++j) R.at(i, j) *= inv;
    for (int k = 0; k < i; ++k) {
      if (R.at(k, pc).isZero()) continue;
      Scalar fac = R.at(k, pc);
      for (int j = pc; j < n; ++j) R.at(k, j) -= fac * R.at(i, j);
    }
  }
  Echelon e;
  e.rref = std::move(R);
  e.pivots = std::move(pivots);
  e.rank = r;
  return e;
}

void checkUniform(const Matrix& A) {
  for (const auto& x : A.a) requireSameField(A.field, x.field());
}

}  // namespace

Echelon echelonReference(Matrix A) {
  checkUniform(A);
  return gaussJordan(std::move(A), /*parallel=*/false);
}

Echelon echelon(Matrix A) {
  checkUniform(A);
  if (A.field->kind == Field::Kind::Rational) return bareissRref(A);
  return gaussJordan(std::move(A), /*parallel=*/true);
}

int rank(const Matrix& A) { return echelon(A).rank; }

namespace {

std::vector<Vec> kernelFromEchelon(const Echelon& e, const FieldPtr& f, int n) {
  std::vector<bool> isPivot(n, false);
  for (int p : e.pivots) isPivot[p] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < n; ++c) {
    if (isPivot[c]) continue;
    Vec v = vecZero(f, n);
    v[c] = Scalar::one(f);
    for (int i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.rref.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vec> kernelBasis(const Matrix& A) {
  Echelon e = echelon(A);
  return kernelFromEchelon(e, A.field, A.cols);
}

std::optional<std::pair<Vec, std::vector<Vec>>> solveAll(const Matrix& A, const Vec& b) {
  if (static_cast<int>(b.size()) != A.rows) throw Error("DimensionMismatch", "solveAll shapes");
  Matrix aug(A.field, A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  Echelon e = echelon(std::move(aug));
  for (int p : e.pivots)
    if (p == A.cols) return std::nullopt;
  Vec part = vecZero(A.field, A.cols);
  for (int i = 0; i < e.rank; ++i) part[e.pivots[i]] = e.rref.at(i, A.cols);
  // kernel read off the same echelon, ignoring the augmented column
  Echelon sub;
  sub.rank = e.rank;
  sub.pivots = e.pivots;
  sub.rref = Matrix(A.field, e.rref.rows, A.cols);
  for (int i = 0; i < e.rref.rows; ++i)
    for (int j = 0; j < A.cols; ++j) sub.rref.at(i, j) = e.rref.at(i, j);
  return std::make_pair(std::move(part), kernelFromEchelon(sub, A.field, A.cols));
}

std::optional<Vec> coordinatesIn(const std::vector<Vec>& basis, const Vec& v, const FieldPtr& f) {
  Matrix B = Matrix::fromColumns(f, static_cast<int>(v.size()), basis);
  auto sol = solveAll(B, v);
  if (!sol) return std::nullopt;
  return sol->first;
}

Matrix inverseMatrix(const Matrix& A) {
  if (A.rows != A.cols) throw Error("DimensionMismatch", "inverse of non-square matrix");
  int n = A.rows;
  Matrix aug(A.field, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = Scalar::one(A.field);
  }
  Echelon e = echelon(std::move(aug));
  if (e.rank < n || e.pivots[n - 1] != n - 1) throw Error("Singular", "matrix is not invertible");
  Matrix inv(A.field, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
  return inv;
}

SpanSolver::SpanSolver(FieldPtr f, const std::vector<Vec>& basis, int ambient)
    : field_(std::move(f)), ambient_(ambient), d_(static_cast<int>(basis.size())) {
  Matrix aug(field_, d_, ambient_ + d_);
  for (int i = 0; i < d_; ++i) {
    if (static_cast<int>(basis[i].size()) != ambient_)
      throw Error("DimensionMismatch", "span basis vector length");
    for (int j = 0; j < ambient_; ++j) aug.at(i, j) = basis[i][j];
    aug.at(i, ambient_ + i) = Scalar::one(field_);
  }
  ech_ = echelon(std::move(aug));
}

std::optional<Vec> SpanSolver::coords(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error("DimensionMismatch", "span query length");
  // reduce v against the rref rows whose pivot lies in the span part; the
  // identity columns then convert rref coordinates back to the input basis
  Vec w = v;
  Vec c = vecZero(field_, d_);
  for (int i = 0; i < ech_.rank; ++i) {
    int p = ech_.pivots[i];
    if (p >= ambient_) break;  // remaining rows are zero on the span part
    if (w[p].isZero()) continue;
    Scalar f = w[p];
    for (int j = p; j < ambient_; ++j) w[j] -= f * ech_.rref.at(i, j);
    for (int j = 0; j < d_; ++j) c[j] += f * ech_.rref.at(i, ambient_ + j);
  }
  for (const auto& x : w)
    if (!x.isZero()) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------- SparseSystem

void SparseSystem::addRow(const std::map<int, Scalar>& row) {
  std::vector<std::pair<int, Scalar>> r;
  for (const auto& [c, s] : row) {
    if (c < 0 || c >= cols_) throw Error("IndexOutOfRange", "sparse row column");
    if (!s.isZero()) r.emplace_back(c, s);
  }
  if (!r.empty()) rows_.push_back(std::move(r));
}

std::vector<Vec> SparseSystem::kernel() const {
  // union-find over columns
  std::vector<int> parent(cols_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& r : rows_) {
    int h = find(r.front().first);
    for (const auto& [c, s] : r) parent[find(c)] = h;
  }
  // group columns per component, ordered by smallest member column
  std::map<int, std::vector<int>> comps;
  for (int c = 0; c < cols_; ++c) comps[find(c)].push_back(c);
  std::map<int, std::vector<const std::vector<std::pair<int, Scalar>>*>> compRows;
  for (const auto& r : rows_) compRows[find(r.front().first)].push_back(&r);

  // per-component dense kernels, results keyed by global free column
  std::map<int, Vec> byFreeCol;
  for (const auto& [root, gcols] : comps) {
    auto it = compRows.find(root);
    if (it == compRows.end()) {
      for (int c : gcols) {
        Vec v = vecZero(field_, cols_);
        v[c] = Scalar::one(field_);
        byFreeCol[c] = std::move(v);
      }
      continue;
    }
    std::map<int, int> local;
    for (size_t i = 0; i < gcols.size(); ++i) local[gcols[i]] = static_cast<int>(i);
    Matrix M(field_, static_cast<int>(it->second.size()), static_cast<int>(gcols.size()));
    for (size_t ri = 0; ri < it->second.size(); ++ri)
      for (const auto& [c, s] : *it->second[ri]) M.at(static_cast<int>(ri), local[c]) = s;
    Echelon e = echelon(std::move(M));
    std::vector<bool> isPivot(gcols.size(), false);
    for (int p : e.pivots) isPivot[p] = true;
    for (size_t lc = 0; lc < gcols.size(); ++lc) {
      if (isPivot[lc]) continue;
      Vec v = vecZero(field_, cols_);
      v[gcols[lc]] = Scalar::one(field_);
      for (int i = 0; i < e.rank; ++i)
        v[gcols[e.pivots[i]]] = -e.rref.at(i, static_cast<int>(lc));
      byFreeCol[gcols[lc]] = std::move(v);
    }
  }
  std::vector<Vec> basis;
  basis.reserve(byFreeCol.size());
  for (auto& [c, v] : byFreeCol) basis.push_back(std::move(v));
  return basis;
}

}  // namespace cofrob
