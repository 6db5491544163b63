#include "cofrob/matrix.hpp"

#include <sstream>

namespace cofrob {

Matrix Matrix::identity(const FieldPtr& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  requireSameField(field, o.field);
  if (cols != o.rows) throw Error("DimensionMismatch", "matrix product shapes");
  Matrix r(field, rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Scalar& x = at(i, k);
      if (x.isZero()) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  requireSameField(field, o.field);
  if (rows != o.rows || cols != o.cols) throw Error("DimensionMismatch", "matrix sum shapes");
  Matrix r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar::fromInt(field, -1)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.a) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols) throw Error("DimensionMismatch", "matrix-vector shapes");
  Vec r = vecZero(field, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!at(i, j).isZero()) r[i] += at(i, j) * v[j];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

bool Matrix::isZero() const {
  for (const auto& x : a)
    if (!x.isZero()) return false;
  return true;
}

Matrix Matrix::fromColumns(const FieldPtr& f, int rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows)
      throw Error("DimensionMismatch", "column length");
    for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = cols[c][r];
  }
  return m;
}

Matrix Matrix::fromRows(const FieldPtr& f, int cols, const std::vector<Vec>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw Error("DimensionMismatch", "row length");
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

Vec Matrix::col(int c) const {
  Vec v;
  v.reserve(rows);
  for (int r = 0; r < rows; ++r) v.push_back(at(r, c));
  return v;
}

Vec Matrix::row(int r) const {
  Vec v;
  v.reserve(cols);
  for (int c = 0; c < cols; ++c) v.push_back(at(r, c));
  return v;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

Vec vecZero(const FieldPtr& f, int n) { return Vec(n, Scalar::zero(f)); }

Vec vecAdd(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vecSub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vecScale(const Vec& a, const Scalar& c) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool vecIsZero(const Vec& v) {
  for (const auto& x : v)
    if (!x.isZero()) return false;
  return true;
}

bool vecEq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.empty()) throw Error("DimensionMismatch", "dot of empty vectors");
  Scalar s = Scalar::zero(a[0].field());
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cofrob
