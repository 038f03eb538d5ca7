#include "mconv/matrix.hpp"

#include "mconv/error.hpp"
#include "mconv/linalg.hpp"

namespace mconv {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) { return scalar(Scalar::one(f), n); }

Matrix Matrix::scalar(const Scalar& s, std::size_t n) {
  Matrix m(s.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& diag) {
  if (diag.empty()) throw Error(ErrorKind::DimensionMismatch, "empty diagonal");
  Matrix m(diag[0].field(), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<RowVector>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(f, rows.size(), cols);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged integer matrix");
    std::size_t j = 0;
    for (long v : r) m(i, j++) = Scalar(f, v);
    ++i;
  }
  return m;
}

RowVector Matrix::row(std::size_t i) const {
  return RowVector(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const RowVector& v) {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].field() != field_) throw Error(ErrorKind::FieldMismatch, "row field mismatch");
    (*this)(i, j) = v[j];
  }
}

std::vector<RowVector> Matrix::row_list() const {
  std::vector<RowVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix m(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& v = (*this)(i, j);
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::pow(long e) const {
  if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "power of a non-square matrix");
  if (e < 0) return inverse(*this).pow(-e);
  Matrix result = identity(field_, rows_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

void Matrix::check_compatible(const Matrix& b) const {
  if (field_ != b.field_) throw Error(ErrorKind::FieldMismatch, "matrix fields differ");
  if (rows_ != b.rows_ || cols_ != b.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
}

Matrix& Matrix::operator+=(const Matrix& b) {
  check_compatible(b);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += b.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
  check_compatible(b);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= b.a_[k];
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& v : m.a_) v = -v;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw Error(ErrorKind::FieldMismatch, "matrix fields differ");
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r(m);
  for (auto& v : r.a_) v = s * v;
  return r;
}

bool Matrix::operator==(const Matrix& b) const {
  return field_ == b.field_ && rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

RowVector operator*(const RowVector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "vector-matrix shapes");
  RowVector out(m.cols(), Scalar::zero(m.field()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(k, j).is_zero()) out[j] += v[k] * m(k, j);
  }
  return out;
}

RowVector add(const RowVector& a, const RowVector& b) {
  RowVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RowVector scale(const RowVector& v, const Scalar& s) {
  RowVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

bool is_zero_vector(const RowVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RowVector zero_vector(const Field& f, std::size_t n) { return RowVector(n, Scalar::zero(f)); }

Matrix embed(const Matrix& m, const Field& target) {
  Matrix r(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = embed(m(i, j), target);
  return r;
}

}  // namespace mconv
