#pragma once

#include <optional>

#include "cofrob/coalgebra.hpp"

namespace cofrob {

enum class Side { Left, Right };

inline Side mirror(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline const char* sideName(Side s) { return s == Side::Left ? "left" : "right"; }

/// Right side: rho(m_a) = sum c * m_mod (x) x_co.
/// Left side:  rho(m_a) = sum c * x_co (x) m_mod.
struct RhoTerm {
  int mod, co;
  Scalar c;
};

struct Comodule {
  Side side = Side::Right;
  CoalgPtr coalg;
  std::vector<std::string> basisNames;
  std::vector<std::vector<RhoTerm>> rho;

  int dim() const { return static_cast<int>(basisNames.size()); }
  const FieldPtr& field() const { return coalg->field; }
};

ValidationReport validateComodule(const Comodule& M);

/// C as a comodule over itself via Delta.
Comodule regularComodule(const CoalgPtr& C, Side side);

/// Convolution action of f in C* (dual-basis coordinates) on m in M:
/// f -> m = f(m_1) m_0 for right comodules, m <- f = f(m_{-1}) m_0 on the left.
Vec cstarAction(const Comodule& M, const Vec& f, const Vec& m);

/// Basis of comodule morphisms M -> N (same side, same coalgebra), as
/// (dim N) x (dim M) matrices. Deterministic: reduced kernel of the sparse
/// constraint system in a fixed unknown order.
std::vector<Matrix> homBasis(const Comodule& M, const Comodule& N);

bool isComoduleMorphism(const Comodule& M, const Comodule& N, const Matrix& f);

/// Dual comodule on the dual basis; the side flips.
Comodule dualComodule(const Comodule& M);

/// Given a morphism phi: M -> N* of right comodules (M right, N left), the
/// transpose psi: N -> M* with psi(n)(m) = phi(m)(n). Throws NotAMorphism if
/// phi fails the morphism equations.
Matrix lemmaTranspose(const Comodule& M, const Comodule& N, const Matrix& phi);

/// Jacobson radical of a finite-dimensional algebra by the trace-form kernel;
/// requires char 0 or char p > dim (UnsupportedCharacteristic otherwise).
/// Internally re-checks that the quotient algebra has zero radical.
std::vector<Vec> radicalBasis(const DualAlgebra& A);

/// Cached radical of the convolution algebra C*.
const std::vector<Vec>& coalgRadical(const Coalgebra& C);

/// Basis of { m in M : J(C*) annihilates m } — the largest semisimple
/// subcomodule.
std::vector<Vec> socle(const Comodule& M);

/// Quotient of M by a subcomodule, with the projection and a linear section
/// (coordinates of the complement spanned by the non-pivot basis vectors).
struct QuotientComodule {
  Comodule quot;
  Matrix proj;     // dim quot x dim M
  Matrix section;  // dim M x dim quot; proj * section = id
};

/// Throws NotASubcomodule when span(sub) is not rho-stable.
QuotientComodule quotientComodule(const Comodule& M, const std::vector<Vec>& sub);

/// M / (J -> M).
QuotientComodule cosocle(const Comodule& M);

/// Coradical C_0 = socle of the regular comodule (side-independent); cached.
const std::vector<Vec>& coradical(const Coalgebra& C);

/// Comodule structure on span(basis) in the coordinates of `basis`; throws
/// NotASubcomodule if the span is not rho-stable.
Comodule restrictComodule(const Comodule& M, const std::vector<Vec>& basis,
                          std::vector<std::string> names = {});

/// Smallest subcomodule containing the given vectors (span of the C*-orbit).
std::vector<Vec> generatedSubcomodule(const Comodule& M, const std::vector<Vec>& seeds);

Comodule directSum(const Comodule& A, const Comodule& B);

ValidationReport validateDecomposition(const Coalgebra& C, const DecompositionData& D);

/// Isomorphism test for comodules with simple essential socle (same side):
/// true iff dims agree and some hom restricts nonzero to soc E; the witness is
/// re-verified to have full rank. PreconditionFailed when a socle cannot be
/// certified simple.
std::optional<Matrix> isoInjectiveIndec(const Comodule& E, const Comodule& F);

}  // namespace cofrob
