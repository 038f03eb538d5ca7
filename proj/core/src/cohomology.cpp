#include "mconv/cohomology.hpp"

namespace mconv {

namespace {

// Block k holds T_{k+1} ... T_{r+1}, so v lies in H_T iff v * C = 0.
Matrix tail_products(const MonodromyTuple& t) {
  const std::size_t d = t.dim(), n = t.size();
  Matrix c(t.field(), n * d, d);
  Matrix p = Matrix::identity(t.field(), d);
  for (std::size_t k = n; k-- > 0;) {
    c.set_block(k * d, 0, p);
    p = t[k] * p;
  }
  return c;
}

}  // namespace

CohomologySpaces cohomology_spaces(const MonodromyTuple& t) {
  const Field f = t.field();
  const std::size_t d = t.dim(), n = t.size(), big = n * d;
  const Matrix one = Matrix::identity(f, d);
  Matrix c = tail_products(t);

  Subspace h = Subspace::span(f, big, kernel_basis(c));

  Subspace e(f, big);
  for (std::size_t a = 0; a < d; ++a) {
    RowVector v = zero_vector(f, big);
    for (std::size_t k = 0; k < n; ++k) {
      RowVector part = one.row(a) * (t[k] - one);
      for (std::size_t j = 0; j < d; ++j) v[k * d + j] = part[j];
    }
    e.add(v);
  }

  // K = direct sum of the images im(T_k - 1); U = K intersected with H.
  std::vector<RowVector> k_rows;
  for (std::size_t k = 0; k < n; ++k) {
    Subspace im = Subspace::row_space(t[k] - one);
    for (const auto& b : im.basis()) {
      RowVector v = zero_vector(f, big);
      for (std::size_t j = 0; j < d; ++j) v[k * d + j] = b[j];
      k_rows.push_back(std::move(v));
    }
  }
  Subspace u(f, big);
  if (!k_rows.empty()) {
    Matrix km = Matrix::from_rows(f, k_rows, big);
    for (const auto& a : kernel_basis(km * c)) u.add(a * km);
  }
  return {std::move(h), std::move(e), std::move(u)};
}

std::size_t invariants_dim(const MonodromyTuple& t) {
  const std::size_t d = t.dim();
  Matrix stacked(t.field(), d, d * t.size());
  const Matrix one = Matrix::identity(t.field(), d);
  for (std::size_t k = 0; k < t.size(); ++k) stacked.set_block(0, k * d, t[k] - one);
  return kernel_basis(stacked).size();
}

std::size_t coinvariants_dim(const MonodromyTuple& t) {
  const std::size_t d = t.dim();
  const Matrix one = Matrix::identity(t.field(), d);
  Subspace images(t.field(), d);
  for (const auto& m : t.entries()) images = images.sum(Subspace::row_space(m - one));
  return d - images.dim();
}

long parabolic_rank_formula(const MonodromyTuple& t) {
  const Matrix one = Matrix::identity(t.field(), t.dim());
  long total = 0;
  for (const auto& m : t.entries()) total += static_cast<long>(rank(m - one));
  return total - 2 * static_cast<long>(t.dim()) + static_cast<long>(invariants_dim(t)) +
         static_cast<long>(coinvariants_dim(t));
}

}  // namespace mconv
