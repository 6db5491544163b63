#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cofrob/matrix.hpp"

namespace cofrob {

/// Reduced row echelon form plus pivot bookkeeping. The RREF is canonical, so
/// every downstream basis (kernels, solutions) is deterministic.
struct Echelon {
  Matrix rref;
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank = 0;
};

/// Serial reference: naive Gauss-Jordan with field division. Kept as the
/// correctness oracle for the production kernels and for the benchmark.
Echelon echelonReference(Matrix A);

/// Production path: fraction-free Bareiss over Q (integer-preserving pivoting,
/// OpenMP row updates), Gauss-Jordan with OpenMP row updates elsewhere.
Echelon echelon(Matrix A);

int rank(const Matrix& A);

/// Basis of { v : A v = 0 }, one vector per free column in ascending column
/// order, entry 1 at the free column (reduced echelon convention).
std::vector<Vec> kernelBasis(const Matrix& A);

/// Full affine solution set of A x = b, or nullopt when inconsistent.
std::optional<std::pair<Vec, std::vector<Vec>>> solveAll(const Matrix& A, const Vec& b);

/// Coordinates of v in the span of `basis` (columns), or nullopt if outside.
std::optional<Vec> coordinatesIn(const std::vector<Vec>& basis, const Vec& v, const FieldPtr& f);

/// Inverse via a single echelon of [A | I]; throws Singular.
Matrix inverseMatrix(const Matrix& A);

/// Membership/coordinate queries against a fixed spanning set: one echelon of
/// [B | I] up front, O(dim * n) per query afterwards.
class SpanSolver {
 public:
  SpanSolver(FieldPtr f, const std::vector<Vec>& basis, int ambient);

  int rank() const { return ech_.rank; }
  /// Coordinates of v in the ORIGINAL basis vectors, or nullopt if outside.
  std::optional<Vec> coords(const Vec& v) const;
  bool contains(const Vec& v) const { return coords(v).has_value(); }

 private:
  FieldPtr field_;
  int ambient_, d_;
  Echelon ech_;  // of [B | I_d]
};

/// Homogeneous system with sparse rows; the kernel computation splits the
/// unknowns into connected components and runs the dense kernels per component,
/// which keeps block-structured systems (hom spaces, socles) cheap. Output is
/// identical to the dense kernelBasis of the stacked row matrix.
class SparseSystem {
 public:
  SparseSystem(FieldPtr f, int cols) : field_(std::move(f)), cols_(cols) {}

  void addRow(const std::map<int, Scalar>& row);
  int cols() const { return cols_; }
  std::vector<Vec> kernel() const;

 private:
  FieldPtr field_;
  int cols_;
  std::vector<std::vector<std::pair<int, Scalar>>> rows_;
};

}  // namespace cofrob
