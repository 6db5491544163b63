#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cofrob {

/// Error with a machine-readable kind tag ("FieldMismatch", "ZeroInverse", ...).
struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

/// Field descriptor shared by all scalars of one computation.
/// Supported: Q, F_p (p prime), and simple extensions K[t]/(minpoly) of Q or F_p.
class Field {
 public:
  enum class Kind { Rational, Prime, Extension };

  Kind kind = Kind::Rational;
  long modulus = 0;                // Prime
  FieldPtr base;                   // Extension
  std::vector<Scalar> minpoly;     // Extension: monic, size degree+1, coeffs over base
  std::string varName = "t";
  std::vector<std::string> warnings;  // sanity-probe findings, non-fatal

  static FieldPtr rational();
  static FieldPtr prime(long p);
  // Runs a cheap irreducibility probe (rational roots, square-freeness); failures
  // land in warnings, hard errors only arise later on a zero divisor.
  static FieldPtr extension(FieldPtr base, std::vector<Scalar> minpoly,
                            std::string varName = "t");

  int degree() const;  // extension degree, 1 otherwise
  bool same(const Field& o) const;
  std::string describe() const;
};

/// 0 for Q and its extensions, p for F_p and its extensions.
long fieldCharacteristic(const FieldPtr& f);

inline void requireSameField(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || !a->same(*b))
    throw Error("FieldMismatch", "scalars from different fields");
}

/// Immutable exact scalar. Rational values are always stored reduced with
/// positive denominator (mpq canonicalization).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar fromInt(const FieldPtr& f, long n);
  static Scalar fromRational(const FieldPtr& f, const mpq_class& q);
  /// Extension element from coefficient vector over the base field (low degree first).
  static Scalar fromCoeffs(const FieldPtr& f, std::vector<Scalar> coeffs);

  const FieldPtr& field() const { return field_; }
  bool isZero() const;
  bool isOne() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  const mpq_class& rat() const;                 // Rational only
  long residue() const;                         // Prime only
  const std::vector<Scalar>& coeffs() const;    // Extension only

  /// "p/q" (Q, "/q" omitted when q=1), "k mod p" (F_p), "[c0,c1,...]" (extension).
  std::string str() const;
  static Scalar parse(const FieldPtr& f, const std::string& s);

 private:
  FieldPtr field_;
  std::variant<mpq_class, long, std::vector<Scalar>> v_;
};

// --- base-field polynomial helpers (used by extension arithmetic and probes) ---
using Poly = std::vector<Scalar>;  // coeffs over some field, low degree first

Poly polyTrim(Poly p);
int polyDeg(const Poly& p);  // -1 for zero
Poly polyAdd(const Poly& a, const Poly& b, const FieldPtr& f);
Poly polyMul(const Poly& a, const Poly& b, const FieldPtr& f);
Poly polyScale(const Poly& a, const Scalar& c);
/// Remainder of a modulo monic b.
Poly polyMod(Poly a, const Poly& b, const FieldPtr& f);
/// g = gcd(a,b) (monic), with g = u*a + v*b.
void polyGcdExt(Poly a, Poly b, const FieldPtr& f, Poly& g, Poly& u, Poly& v);

}  // namespace cofrob
