#include "support.hpp"

#include "mconv/linalg.hpp"

namespace mconv::test {

std::uint64_t& seed() {
  static std::uint64_t s = 20240611;
  return s;
}

std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() * 0x9E3779B97F4A7C15ULL + salt); }

Scalar random_scalar(std::mt19937_64& g, const Field& f, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  if (f.is_finite()) {
    const auto p = f.characteristic();
    std::uniform_int_distribution<std::int64_t> fp(0, p - 1);
    return Scalar::from_finite_coeffs(f, fp(g), f.degree() == 2 ? fp(g) : 0);
  }
  std::vector<mpq_class> c(static_cast<std::size_t>(f.degree()));
  for (auto& x : c) x = dist(g);
  return Scalar::from_rational_coeffs(f, c);
}

Matrix random_matrix(std::mt19937_64& g, const Field& f, std::size_t d, long lo, long hi) {
  Matrix m(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = random_scalar(g, f, lo, hi);
  return m;
}

Matrix random_invertible(std::mt19937_64& g, const Field& f, std::size_t d) {
  // Mostly generic matrices, sometimes structured ones (reflections,
  // unipotents, scalars) so that kernels of T - 1 are not always trivial.
  std::uniform_int_distribution<int> kind(0, 5);
  for (;;) {
    Matrix m(f, d, d);
    switch (kind(g)) {
      case 0: {  // pseudo-reflection: 1 + (column) * (row)
        Matrix u = random_matrix(g, f, d, -2, 2);
        m = Matrix::identity(f, d);
        Scalar c = random_scalar(g, f, -2, 2);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) m(i, j) += c * u(i, 0) * u(0, j);
        break;
      }
      case 1:  // scalar
        m = Matrix::scalar(random_scalar(g, f, -2, 2), d);
        break;
      case 2: {  // unipotent upper triangular, conjugated
        m = Matrix::identity(f, d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = i + 1; j < d; ++j) m(i, j) = random_scalar(g, f, -2, 2);
        Matrix s = random_matrix(g, f, d, -1, 1);
        if (is_invertible(s)) m = inverse(s) * m * s;
        break;
      }
      default:
        m = random_matrix(g, f, d);
    }
    if (is_invertible(m)) return m;
  }
}

MonodromyTuple random_tuple(std::mt19937_64& g, const Field& f, std::size_t d, std::size_t r) {
  std::vector<Matrix> entries;
  for (std::size_t i = 0; i < r; ++i) entries.push_back(random_invertible(g, f, d));
  return MonodromyTuple::from_finite(std::move(entries));
}

MonodromyTuple printed_LstarL() {
  const Field Q = Field::rational();
  return MonodromyTuple({Matrix::from_ints(Q, {{-3, -8}, {2, 5}}), Matrix::from_ints(Q, {{1, -4}, {0, 1}}),
                         Matrix::from_ints(Q, {{1, 0}, {2, 1}}), Matrix::from_ints(Q, {{-3, -4}, {4, 5}})},
                        Points{-2, 0, 2});
}

MonodromyTuple printed_V() {
  const Field Q = Field::rational();
  return MonodromyTuple({Matrix::from_ints(Q, {{-1, -4, 4}, {0, 1, 0}, {0, 0, 1}}),
                         Matrix::from_ints(Q, {{1, 0, 0}, {-2, -1, 2}, {0, 0, 1}}),
                         Matrix::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {4, 4, -1}}),
                         Matrix::from_ints(Q, {{-1, -4, 4}, {2, 7, -6}, {4, 12, -9}})},
                        Points{-2, 0, 2});
}

}  // namespace mconv::test
