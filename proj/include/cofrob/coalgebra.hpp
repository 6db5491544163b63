#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cofrob/linalg.hpp"
#include "cofrob/matrix.hpp"

namespace cofrob {

struct ValidationIssue {
  std::string axiom;    // "coassociativity", "counit", "coaction", ...
  std::string element;  // offending basis element
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  std::vector<ValidationIssue> issues;
  void fail(std::string axiom, std::string element, std::string detail = "") {
    valid = false;
    issues.push_back({std::move(axiom), std::move(element), std::move(detail)});
  }
};

/// One isomorphism type of simple subcomodule of C, with its multiplicity in
/// the decomposition of C into injective indecomposables.
struct SimpleType {
  std::vector<Vec> basis;  // vectors in C coordinates
  int mult = 1;            // n(S) on the left, p(T) on the right
  int endoDim = 1;         // d(S); >1 only for nonSplit data
  bool nonSplit = false;
};

/// One injective indecomposable direct summand of C (one copy, not a type).
struct InjectiveCopy {
  std::vector<Vec> basis;
  int simpleIndex = 0;  // socle type, indexing simplesLeft / simplesRight
};

struct DecompositionData {
  std::vector<SimpleType> simplesLeft, simplesRight;
  std::vector<InjectiveCopy> injectivesLeft, injectivesRight;
};

struct DualAlgebra;
struct CoalgCache;

/// Finite-dimensional coalgebra given by sparse structure constants:
/// delta[k] lists (i, j, c) with Delta(b_k) = sum c * b_i (x) b_j.
struct DeltaTerm {
  int left, right;
  Scalar c;
};

struct Coalgebra {
  FieldPtr field;
  std::vector<std::string> basisNames;
  std::vector<std::vector<DeltaTerm>> delta;
  Vec epsilon;
  std::optional<DecompositionData> decomp;

  mutable std::shared_ptr<CoalgCache> cache = std::make_shared<CoalgCache>();

  int dim() const { return static_cast<int>(basisNames.size()); }
  int indexOf(const std::string& name) const;
};

using CoalgPtr = std::shared_ptr<const Coalgebra>;

bool sameCoalgebra(const Coalgebra& a, const Coalgebra& b);

/// Convolution algebra on C*: mult[(i,j)] holds f_i * f_j in the dual basis.
struct DualAlgebra {
  FieldPtr field;
  int dim = 0;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> mult;
  Vec unit;  // = epsilon in dual-basis coordinates

  Vec multiply(const Vec& a, const Vec& b) const;
  Matrix leftMult(const Vec& a) const;
};

struct CoalgCache {
  std::mutex m;
  std::shared_ptr<const DualAlgebra> dual;
  std::shared_ptr<const std::vector<Vec>> radical;
  std::shared_ptr<const std::vector<Vec>> coradical;
};

ValidationReport validateCoalgebra(const Coalgebra& C);

/// Cached; validates associativity and unit on first computation.
const DualAlgebra& dualAlgebra(const Coalgebra& C);

// ----- corpus builders (all attach ground-truth DecompositionData except the
// ----- algebra dual, whose decomposition the caller supplies when known) -----

/// Comatrix coalgebra M_n^c: basis e_i_j, Delta(e_ij) = sum_k e_ik (x) e_kj.
CoalgPtr buildMatrixCoalgebra(int n, FieldPtr field = Field::rational());

/// Divided power truncation: basis c_0..c_n, Delta(c_n) = sum_{i+j=n} c_i (x) c_j.
CoalgPtr buildDividedPower(int n, FieldPtr field = Field::rational());

/// One grouplike g plus n (g,g)-primitives c_1..c_n.
CoalgPtr buildPrimitivesFan(int n, FieldPtr field = Field::rational());

/// Finite-dimensional associative unital algebra presented by structure
/// constants: multTable[i][j] = coordinates of b_i * b_j.
struct AlgebraPresentation {
  FieldPtr field;
  std::vector<std::string> basisNames;
  std::vector<std::vector<Vec>> multTable;
  Vec unit;
  int dim() const { return static_cast<int>(basisNames.size()); }
};

/// C = A* with Delta dual to multiplication and epsilon = evaluation at 1_A.
/// Throws NotAssociative / NoUnit on a bad presentation.
CoalgPtr buildDualOfAlgebra(const AlgebraPresentation& A);

/// Evaluation of a functional (dual-basis coordinates) on an element of C.
Scalar evalFunctional(const Vec& f, const Vec& c);

}  // namespace cofrob
