#include "cofrob/scalar.hpp"

#include <sstream>

namespace cofrob {

namespace {

long modNorm(long x, long p) {
  long r = x % p;
  return r < 0 ? r + p : r;
}

long modMul(long a, long b, long p) {
  return static_cast<long>(static_cast<__int128>(a) * b % p);
}

long modInv(long a, long p) {
  // extended Euclid
  long t = 0, newt = 1, r = p, newr = modNorm(a, p);
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw Error("ZeroInverse", "element not invertible mod p");
  return modNorm(t, p);
}

bool isPrime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- Field

long fieldCharacteristic(const FieldPtr& f) {
  const Field* p = f.get();
  while (p->kind == Field::Kind::Extension) p = p->base.get();
  return p->kind == Field::Kind::Prime ? p->modulus : 0;
}

FieldPtr Field::rational() {
  static FieldPtr q = [] {
    auto f = std::make_shared<Field>();
    f->kind = Kind::Rational;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::prime(long p) {
  if (!isPrime(p)) throw Error("NotPrime", "modulus " + std::to_string(p) + " is not prime");
  auto f = std::make_shared<Field>();
  f->kind = Kind::Prime;
  f->modulus = p;
  return f;
}

int Field::degree() const {
  return kind == Kind::Extension ? static_cast<int>(minpoly.size()) - 1 : 1;
}

bool Field::same(const Field& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Rational:
      return true;
    case Kind::Prime:
      return modulus == o.modulus;
    case Kind::Extension: {
      if (!base->same(*o.base)) return false;
      if (minpoly.size() != o.minpoly.size()) return false;
      for (size_t i = 0; i < minpoly.size(); ++i)
        if (minpoly[i] != o.minpoly[i]) return false;
      return true;
    }
  }
  return false;
}

std::string Field::describe() const {
  switch (kind) {
    case Kind::Rational:
      return "Q";
    case Kind::Prime:
      return "F" + std::to_string(modulus);
    case Kind::Extension: {
      std::ostringstream os;
      os << base->describe() << "[" << varName << "]/(";
      for (size_t i = 0; i < minpoly.size(); ++i) {
        if (i) os << ",";
        os << minpoly[i].str();
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

namespace {

// Rational-root and square-freeness probe for an extension minpoly; findings are
// reported as warnings on the field.
void probeMinpoly(Field& f) {
  const FieldPtr& base = f.base;
  const Poly& mp = f.minpoly;
  // square-freeness: gcd(mp, mp') constant
  Poly deriv;
  for (size_t i = 1; i < mp.size(); ++i)
    deriv.push_back(mp[i] * Scalar::fromInt(base, static_cast<long>(i)));
  deriv = polyTrim(std::move(deriv));
  if (polyDeg(deriv) >= 0) {
    Poly g, u, v;
    polyGcdExt(mp, deriv, base, g, u, v);
    if (polyDeg(g) > 0)
      f.warnings.push_back("minimal polynomial is not square-free");
  } else {
    f.warnings.push_back("minimal polynomial has zero derivative");
  }
  // root search
  if (base->kind == Field::Kind::Prime && base->modulus <= 4096) {
    for (long r = 0; r < base->modulus; ++r) {
      Scalar x = Scalar::fromInt(base, r), acc = Scalar::zero(base);
      for (size_t i = mp.size(); i-- > 0;) acc = acc * x + mp[i];
      if (acc.isZero()) {
        f.warnings.push_back("minimal polynomial has root " + std::to_string(r));
        break;
      }
    }
  } else if (base->kind == Field::Kind::Rational) {
    // candidates p/q with p | a0, q | lead (integerized)
    mpz_class lcmden = 1;
    for (const auto& c : mp) lcmden = lcm(lcmden, c.rat().get_den());
    std::vector<mpz_class> ic;
    for (const auto& c : mp) ic.push_back(mpz_class(c.rat() * lcmden));
    mpz_class a0 = abs(ic.front()), an = abs(ic.back());
    if (a0 == 0) {
      f.warnings.push_back("minimal polynomial has root 0");
      return;
    }
    auto divisors = [](const mpz_class& n) {
      std::vector<mpz_class> ds;
      for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
          ds.push_back(d);
          ds.push_back(n / d);
        }
      return ds;
    };
    for (const auto& p : divisors(a0))
      for (const auto& q : divisors(an))
        for (int sgn : {1, -1}) {
          mpq_class cand(p * sgn, q);
          cand.canonicalize();
          mpq_class acc = 0;
          for (size_t i = ic.size(); i-- > 0;) acc = acc * cand + mpq_class(ic[i]);
          if (acc == 0) {
            f.warnings.push_back("minimal polynomial has rational root " + cand.get_str());
            return;
          }
        }
  }
}

}  // namespace

FieldPtr Field::extension(FieldPtr base, std::vector<Scalar> minpoly, std::string varName) {
  if (!base || base->kind == Kind::Extension)
    throw Error("UnsupportedField", "extension base must be Q or F_p");
  if (minpoly.size() < 2) throw Error("BadMinpoly", "minimal polynomial must have degree >= 1");
  for (const auto& c : minpoly) requireSameField(c.field(), base);
  if (!minpoly.back().isOne()) throw Error("BadMinpoly", "minimal polynomial must be monic");
  auto f = std::make_shared<Field>();
  f->kind = Kind::Extension;
  f->base = std::move(base);
  f->minpoly = std::move(minpoly);
  f->varName = std::move(varName);
  probeMinpoly(*f);
  return f;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::zero(const FieldPtr& f) { return fromInt(f, 0); }
Scalar Scalar::one(const FieldPtr& f) { return fromInt(f, 1); }

Scalar Scalar::fromInt(const FieldPtr& f, long n) {
  Scalar s;
  s.field_ = f;
  switch (f->kind) {
    case Field::Kind::Rational:
      s.v_ = mpq_class(n);
      break;
    case Field::Kind::Prime:
      s.v_ = modNorm(n, f->modulus);
      break;
    case Field::Kind::Extension: {
      std::vector<Scalar> c(f->degree(), Scalar::zero(f->base));
      c[0] = Scalar::fromInt(f->base, n);
      s.v_ = std::move(c);
      break;
    }
  }
  return s;
}

Scalar Scalar::fromRational(const FieldPtr& f, const mpq_class& q) {
  if (f->kind == Field::Kind::Rational) {
    Scalar s;
    s.field_ = f;
    mpq_class c = q;
    c.canonicalize();
    s.v_ = std::move(c);
    return s;
  }
  if (f->kind == Field::Kind::Prime) {
    long num = mpz_class(q.get_num() % f->modulus).get_si();
    long den = mpz_class(q.get_den() % f->modulus).get_si();
    if (modNorm(den, f->modulus) == 0)
      throw Error("ZeroInverse", "denominator divisible by modulus");
    Scalar s;
    s.field_ = f;
    s.v_ = modMul(modNorm(num, f->modulus), modInv(den, f->modulus), f->modulus);
    return s;
  }
  std::vector<Scalar> c(f->degree(), Scalar::zero(f->base));
  c[0] = Scalar::fromRational(f->base, q);
  Scalar s;
  s.field_ = f;
  s.v_ = std::move(c);
  return s;
}

Scalar Scalar::fromCoeffs(const FieldPtr& f, std::vector<Scalar> coeffs) {
  if (f->kind != Field::Kind::Extension)
    throw Error("FieldMismatch", "coefficient vector requires an extension field");
  for (const auto& c : coeffs) requireSameField(c.field(), f->base);
  if (static_cast<int>(coeffs.size()) > f->degree())
    throw Error("BadCoeffs", "coefficient vector longer than extension degree");
  coeffs.resize(f->degree(), Scalar::zero(f->base));
  Scalar s;
  s.field_ = f;
  s.v_ = std::move(coeffs);
  return s;
}

bool Scalar::isZero() const {
  switch (field_->kind) {
    case Field::Kind::Rational:
      return std::get<mpq_class>(v_) == 0;
    case Field::Kind::Prime:
      return std::get<long>(v_) == 0;
    case Field::Kind::Extension:
      for (const auto& c : std::get<std::vector<Scalar>>(v_))
        if (!c.isZero()) return false;
      return true;
  }
  return false;
}

bool Scalar::isOne() const { return *this == one(field_); }

Scalar Scalar::operator+(const Scalar& o) const {
  requireSameField(field_, o.field_);
  Scalar s;
  s.field_ = field_;
  switch (field_->kind) {
    case Field::Kind::Rational:
      s.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
      break;
    case Field::Kind::Prime:
      s.v_ = modNorm(std::get<long>(v_) + std::get<long>(o.v_), field_->modulus);
      break;
    case Field::Kind::Extension: {
      auto c = std::get<std::vector<Scalar>>(v_);
      const auto& d = std::get<std::vector<Scalar>>(o.v_);
      for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
      s.v_ = std::move(c);
      break;
    }
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  switch (field_->kind) {
    case Field::Kind::Rational:
      s.v_ = mpq_class(-std::get<mpq_class>(v_));
      break;
    case Field::Kind::Prime:
      s.v_ = modNorm(-std::get<long>(v_), field_->modulus);
      break;
    case Field::Kind::Extension: {
      auto c = std::get<std::vector<Scalar>>(v_);
      for (auto& x : c) x = -x;
      s.v_ = std::move(c);
      break;
    }
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  requireSameField(field_, o.field_);
  Scalar s;
  s.field_ = field_;
  switch (field_->kind) {
    case Field::Kind::Rational:
      s.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
      break;
    case Field::Kind::Prime:
      s.v_ = modMul(std::get<long>(v_), std::get<long>(o.v_), field_->modulus);
      break;
    case Field::Kind::Extension: {
      const auto& a = std::get<std::vector<Scalar>>(v_);
      const auto& b = std::get<std::vector<Scalar>>(o.v_);
      Poly prod = polyMod(polyMul(a, b, field_->base), field_->minpoly, field_->base);
      prod.resize(field_->degree(), Scalar::zero(field_->base));
      s.v_ = std::move(prod);
      break;
    }
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (isZero()) throw Error("ZeroInverse", "inverse of zero");
  Scalar s;
  s.field_ = field_;
  switch (field_->kind) {
    case Field::Kind::Rational:
      s.v_ = mpq_class(1 / std::get<mpq_class>(v_));
      break;
    case Field::Kind::Prime:
      s.v_ = modInv(std::get<long>(v_), field_->modulus);
      break;
    case Field::Kind::Extension: {
      // extended Euclid against the minimal polynomial
      Poly g, u, v;
      polyGcdExt(polyTrim(std::get<std::vector<Scalar>>(v_)), field_->minpoly, field_->base, g,
                 u, v);
      if (polyDeg(g) != 0)
        throw Error("ReducibleMinpoly",
                    "zero divisor hit; minimal polynomial is not irreducible");
      Poly inv = polyScale(u, g[0].inverse());
      inv = polyMod(std::move(inv), field_->minpoly, field_->base);
      inv.resize(field_->degree(), Scalar::zero(field_->base));
      s.v_ = std::move(inv);
      break;
    }
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  requireSameField(field_, o.field_);
  switch (field_->kind) {
    case Field::Kind::Rational:
      return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    case Field::Kind::Prime:
      return std::get<long>(v_) == std::get<long>(o.v_);
    case Field::Kind::Extension: {
      const auto& a = std::get<std::vector<Scalar>>(v_);
      const auto& b = std::get<std::vector<Scalar>>(o.v_);
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
      return true;
    }
  }
  return false;
}

const mpq_class& Scalar::rat() const { return std::get<mpq_class>(v_); }
long Scalar::residue() const { return std::get<long>(v_); }
const std::vector<Scalar>& Scalar::coeffs() const { return std::get<std::vector<Scalar>>(v_); }

std::string Scalar::str() const {
  switch (field_->kind) {
    case Field::Kind::Rational: {
      const mpq_class& q = std::get<mpq_class>(v_);
      if (q.get_den() == 1) return q.get_num().get_str();
      return q.get_str();
    }
    case Field::Kind::Prime:
      return std::to_string(std::get<long>(v_)) + " mod " + std::to_string(field_->modulus);
    case Field::Kind::Extension: {
      std::ostringstream os;
      os << "[";
      const auto& c = std::get<std::vector<Scalar>>(v_);
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i].str();
      }
      os << "]";
      return os.str();
    }
  }
  return "?";
}

Scalar Scalar::parse(const FieldPtr& f, const std::string& s0) {
  auto strip = [](const std::string& x) {
    size_t a = x.find_first_not_of(" \t");
    size_t b = x.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : x.substr(a, b - a + 1);
  };
  std::string s = strip(s0);
  if (s.empty()) throw Error("ParseError", "empty scalar string");
  if (s.front() == '[') {
    if (f->kind != Field::Kind::Extension || s.back() != ']')
      throw Error("ParseError", "unexpected coefficient list: " + s);
    std::vector<Scalar> coeffs;
    std::string inner = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos <= inner.size() && !inner.empty()) {
      size_t comma = inner.find(',', pos);
      std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
      coeffs.push_back(parse(f->base, strip(tok)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return fromCoeffs(f, std::move(coeffs));
  }
  size_t mod = s.find(" mod ");
  if (mod != std::string::npos) {
    long k = std::stol(s.substr(0, mod));
    long p = std::stol(s.substr(mod + 5));
    FieldPtr target = f;
    if (f->kind == Field::Kind::Extension) target = f->base;
    if (target->kind != Field::Kind::Prime || target->modulus != p)
      throw Error("ParseError", "modulus mismatch in: " + s);
    Scalar base = fromInt(target, k);
    return f->kind == Field::Kind::Extension ? fromCoeffs(f, {base}) : base;
  }
  try {
    mpq_class q(s);
    q.canonicalize();
    return fromRational(f, q);
  } catch (const std::invalid_argument&) {
    throw Error("ParseError", "bad scalar string: " + s);
  }
}

// ---------------------------------------------------------------- polynomials

Poly polyTrim(Poly p) {
  while (!p.empty() && p.back().isZero()) p.pop_back();
  return p;
}

int polyDeg(const Poly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (!p[i].isZero()) return static_cast<int>(i);
  return -1;
}

Poly polyAdd(const Poly& a, const Poly& b, const FieldPtr& f) {
  Poly r(std::max(a.size(), b.size()), Scalar::zero(f));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return polyTrim(std::move(r));
}

Poly polyMul(const Poly& a, const Poly& b, const FieldPtr& f) {
  if (polyDeg(a) < 0 || polyDeg(b) < 0) return {};
  Poly r(a.size() + b.size() - 1, Scalar::zero(f));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].isZero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return polyTrim(std::move(r));
}

Poly polyScale(const Poly& a, const Scalar& c) {
  Poly r = a;
  for (auto& x : r) x *= c;
  return polyTrim(std::move(r));
}

Poly polyMod(Poly a, const Poly& b, const FieldPtr& f) {
  a = polyTrim(std::move(a));
  int db = polyDeg(b);
  Scalar leadInv = b[db].inverse();
  while (polyDeg(a) >= db) {
    int da = polyDeg(a);
    Scalar q = a[da] * leadInv;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    a = polyTrim(std::move(a));
  }
  return a;
}

void polyGcdExt(Poly a, Poly b, const FieldPtr& f, Poly& g, Poly& u, Poly& v) {
  // invariant: r0 = u0*a + v0*b, r1 = u1*a + v1*b
  Poly r0 = polyTrim(std::move(a)), r1 = polyTrim(std::move(b));
  Poly u0 = {Scalar::one(f)}, v0 = {};
  Poly u1 = {}, v1 = {Scalar::one(f)};
  while (polyDeg(r1) >= 0) {
    // r0 = q*r1 + rem
    Poly rem = r0, q;
    int d1 = polyDeg(r1);
    Scalar leadInv = r1[d1].inverse();
    q.assign(std::max(0, polyDeg(rem) - d1 + 1), Scalar::zero(f));
    while (polyDeg(rem) >= d1) {
      int dr = polyDeg(rem);
      Scalar c = rem[dr] * leadInv;
      q[dr - d1] = c;
      for (int i = 0; i <= d1; ++i) rem[dr - d1 + i] -= c * r1[i];
      rem = polyTrim(std::move(rem));
    }
    Poly nu = polyAdd(u0, polyScale(polyMul(q, u1, f), Scalar::fromInt(f, -1)), f);
    Poly nv = polyAdd(v0, polyScale(polyMul(q, v1, f), Scalar::fromInt(f, -1)), f);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(nu);
    v0 = std::move(v1);
    v1 = std::move(nv);
  }
  g = std::move(r0);
  u = std::move(u0);
  v = std::move(v0);
  if (polyDeg(g) >= 0 && !g[polyDeg(g)].isOne()) {
    Scalar c = g[polyDeg(g)].inverse();
    g = polyScale(g, c);
    u = polyScale(u, c);
    v = polyScale(v, c);
  }
}

}  // namespace cofrob
