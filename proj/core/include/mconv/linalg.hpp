#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mconv/error.hpp"
#include "mconv/matrix.hpp"
#include "mconv/polynomial.hpp"

namespace mconv {

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of the left kernel {v : v M = 0}.
std::vector<RowVector> kernel_basis(const Matrix& m);
// Basis of the right null space {x : M x = 0}, returned as vectors.
std::vector<RowVector> nullspace(const Matrix& m);
Scalar det(const Matrix& m);
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

Polynomial char_poly(const Matrix& m);

// Roots in the declared field with multiplicity, found by enumeration
// (finite fields), the rational root theorem (Q) or roots of unity plus
// rational roots (cyclotomic fields). `rest` receives the unsplit cofactor.
std::vector<std::pair<Scalar, int>> roots_in_field(const Polynomial& f, Polynomial* rest = nullptr);

struct JordanBlock {
  Scalar eigenvalue;
  int length;
  bool operator==(const JordanBlock& o) const {
    return length == o.length && eigenvalue == o.eigenvalue;
  }
};

// Multiset of Jordan blocks, kept in canonical order.
struct JordanData {
  std::vector<JordanBlock> blocks;
  int ambient_dim = 0;

  JordanData() = default;
  JordanData(std::vector<JordanBlock> b);
  void canonicalize();
  int count(const Scalar& eigenvalue, int length) const;
  bool operator==(const JordanData& o) const { return blocks == o.blocks; }
  bool operator!=(const JordanData& o) const { return !(*this == o); }
  std::string to_string() const;
};

class DoesNotSplit : public Error {
 public:
  explicit DoesNotSplit(Polynomial factor)
      : Error(ErrorKind::DoesNotSplit,
              "characteristic polynomial has the factor " + factor.to_string() +
                  " without roots in " + factor.field().to_string()),
        factor_(std::move(factor)) {}
  const Polynomial& factor() const { return factor_; }

 private:
  Polynomial factor_;
};

JordanData jordan_data(const Matrix& m);
Matrix jordan_block(const Scalar& eigenvalue, std::size_t length);
Matrix jordan_matrix(const JordanData& j);

// Tensor product with basis e_i (x) f_j ordered lexicographically.
Matrix kronecker(const Matrix& a, const Matrix& b);
JordanData kronecker_jordan(const Scalar& alpha, int n1, const Scalar& beta, int n2);

// Invertible S with S^-1 TA_i S = TB_i for all i, if one exists.
std::optional<Matrix> conjugacy_solve(const std::vector<Matrix>& ta, const std::vector<Matrix>& tb);

// Subspace of F^n held as a reduced echelon basis.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}
  static Subspace span(Field f, std::size_t ambient, const std::vector<RowVector>& vectors);
  static Subspace row_space(const Matrix& m);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RowVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const { return Matrix::from_rows(field_, basis_, ambient_); }

  // Adds v; returns true if the dimension grew.
  bool add(const RowVector& v);
  bool contains(const RowVector& v) const;
  bool contains(const Subspace& s) const;
  // v reduced against the basis (zero iff v lies in the subspace).
  RowVector residue(RowVector v) const;

  Subspace intersect(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<RowVector> basis_;
  std::vector<std::size_t> pivots_;
};

// Coordinates with respect to a fixed list of independent vectors.
class Coordinates {
 public:
  Coordinates(Field f, std::size_t ambient, const std::vector<RowVector>& basis);
  std::size_t size() const { return transform_.rows(); }
  // a with y = sum a_k b_k; throws DimensionInconsistency if y is outside.
  RowVector of(const RowVector& y) const;

 private:
  Field field_;
  std::size_t ambient_;
  Echelon echelon_;
  Matrix transform_;
};

}  // namespace mconv

namespace mconv {

// Dimension of the matrix algebra spanned by all products of the generators.
std::size_t enveloping_algebra_dimension(const std::vector<Matrix>& gens);
// Burnside: the generators act absolutely irreducibly iff they span all of
// End(V).
bool absolutely_irreducible(const std::vector<Matrix>& gens);
// Dimension of {X : X g = g X for all generators g}.
std::size_t centralizer_dimension(const std::vector<Matrix>& gens);

}  // namespace mconv
