#pragma once

#include "cofrob/integrals.hpp"

namespace cofrob {

struct FiniteGroup {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;  // table[a][b] = index of a*b
  int identity = 0;
  std::vector<int> inverse;

  int order() const { return static_cast<int>(elements.size()); }
  int elementIndex(const std::string& name) const;
};

/// Validates associativity/identity/inverses and derives the inverse table.
FiniteGroup makeGroup(std::vector<std::string> elements, std::vector<std::vector<int>> table);

struct Representation {
  FiniteGroup group;
  FieldPtr field;
  std::vector<Matrix> matrices;  // one per group element

  int dim() const { return matrices.empty() ? 0 : matrices[0].rows; }
};

/// eta(xy) = eta(x) eta(y) and eta(e) = id, exhaustively; NotARepresentation.
void validateRepresentation(const Representation& eta);

/// Functions on G as a coalgebra: basis delta_g, Delta(delta_g) split over all
/// factorizations ab = g, epsilon = evaluation at the identity.
CoalgPtr representativeCoalgebra(const FiniteGroup& G, FieldPtr field = Field::rational());

/// Attach DecompositionData built from a complete list of irreducible
/// representations (matrix-coefficient functions become comatrix blocks).
void attachGroupDecomposition(Coalgebra& C, const FiniteGroup& G,
                              const std::vector<Representation>& irreps);

/// Comodule whose induced delta_g-action is exactly eta(g). The coaction that
/// satisfies this is v_i -> sum_j v_j (x) eta_ji (the "ji" coefficient order);
/// re-validated before returning.
Comodule repToComodule(const CoalgPtr& RG, const Representation& eta);

/// Inverse dictionary: eta(g) := action of delta_g on M.
Representation comoduleToRep(const FiniteGroup& G, const Comodule& M);

/// f -> (1/|G|) sum_g f(g), as a functional in delta-dual coordinates.
/// `normalized = false` drops the 1/|G| factor (and the invertibility demand).
Vec haarFunctional(const FiniteGroup& G, const FieldPtr& field, bool normalized = true);

/// Lambda(f) = (1/|G|) sum_x f(x^{-1}) eta(x) v, returned as its matrix on the
/// delta-basis: column g holds Lambda(delta_g).
Matrix quantumIntegralH(const Representation& eta, const Vec& v);

/// i-th coordinate: sum_j Lambda_j(eta_ij); a left inverse of quantumIntegralH.
Vec thetaEta(const Representation& eta, const Matrix& lambda);

/// Exhaustive test of Lambda(x . f) = eta(x) Lambda(f) with (y.f)(x) = f(xy).
bool quantumInvarianceCheck(const Representation& eta, const Matrix& lambda);

/// The integral space of the comodule of eta over R(G).
IntegralSpace intEtaSpace(const CoalgPtr& RG, const Representation& eta);

bool inIntegralSpace(const IntegralSpace& sp, const Matrix& lambda);

/// Integrals against the one-dimensional comodule 1 -> 1 (x) unit; the Hopf
/// picture of "alpha . lambda = alpha(1) lambda". InvalidUnit if the coaction
/// fails the comodule axioms.
IntegralSpace hopfIntegralSpace(const CoalgPtr& C, const Vec& unit);

/// Built-in groups and representations over splitting fields.
struct CatalogEntry {
  FiniteGroup group;
  FieldPtr field;
  std::vector<std::string> repNames;  // demo reps, irreps first
  int irrepCount = 0;                 // prefix of repNames forming a complete set
  Representation rep(const std::string& name) const;
};
CatalogEntry groupCatalog(const std::string& name);  // Z2, Z3, Z4, S3
std::vector<std::string> groupCatalogNames();

}  // namespace cofrob
