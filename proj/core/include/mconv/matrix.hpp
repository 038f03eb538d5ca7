#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mconv/scalar.hpp"

namespace mconv {

using RowVector = std::vector<Scalar>;

// Dense matrix over a Field, row-major. Matrices act on row vectors from the
// right: v -> v * M.
class Matrix {
 public:
  Matrix() : Matrix(Field::rational(), 0, 0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix scalar(const Scalar& s, std::size_t n);
  static Matrix diagonal(const std::vector<Scalar>& diag);
  static Matrix from_rows(Field f, const std::vector<RowVector>& rows, std::size_t cols);
  static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RowVector row(std::size_t i) const;
  void set_row(std::size_t i, const RowVector& v);
  std::vector<RowVector> row_list() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Matrix transpose() const;
  Scalar trace() const;
  bool is_identity() const;
  bool is_zero() const;
  Matrix pow(long e) const;  // negative exponents use the inverse

  Matrix& operator+=(const Matrix& b);
  Matrix& operator-=(const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  Matrix operator-() const;

  bool operator==(const Matrix& b) const;
  bool operator!=(const Matrix& b) const { return !(*this == b); }

  // [[a,b],[c,d]] with scalars in canonical text form.
  std::string to_string() const;

 private:
  void check_compatible(const Matrix& b) const;
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

RowVector operator*(const RowVector& v, const Matrix& m);
RowVector add(const RowVector& a, const RowVector& b);
RowVector scale(const RowVector& v, const Scalar& s);
bool is_zero_vector(const RowVector& v);
RowVector zero_vector(const Field& f, std::size_t n);

// Entrywise coercion into a larger field.
Matrix embed(const Matrix& m, const Field& target);

}  // namespace mconv
