#pragma once

#include <string>
#include <vector>

#include "cofrob/scalar.hpp"

namespace cofrob {

using Vec = std::vector<Scalar>;

/// Dense matrix over one exact field.
struct Matrix {
  int rows = 0, cols = 0;
  FieldPtr field;
  std::vector<Scalar> a;  // row-major

  Matrix() = default;
  Matrix(FieldPtr f, int r, int c)
      : rows(r), cols(c), field(std::move(f)), a(static_cast<size_t>(r) * c, Scalar::zero(field)) {}

  static Matrix identity(const FieldPtr& f, int n);

  Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;  // this * v
  bool operator==(const Matrix& o) const;
  bool isZero() const;

  static Matrix fromColumns(const FieldPtr& f, int rows, const std::vector<Vec>& cols);
  static Matrix fromRows(const FieldPtr& f, int cols, const std::vector<Vec>& rows);
  Vec col(int c) const;
  Vec row(int r) const;

  std::string str() const;
};

Vec vecZero(const FieldPtr& f, int n);
Vec vecAdd(const Vec& a, const Vec& b);
Vec vecSub(const Vec& a, const Vec& b);
Vec vecScale(const Vec& a, const Scalar& c);
bool vecIsZero(const Vec& v);
bool vecEq(const Vec& a, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);

}  // namespace cofrob
