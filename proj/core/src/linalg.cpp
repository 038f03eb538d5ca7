#include "mconv/linalg.hpp"

#include <algorithm>
#include <random>

#include "mconv/numtheory.hpp"

namespace mconv {

Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<RowVector> nullspace(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RowVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RowVector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RowVector> kernel_basis(const Matrix& m) { return nullspace(m.transpose()); }

Scalar det(const Matrix& m0) {
  if (!m0.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  Matrix m = m0;
  std::size_t n = m.rows();
  Scalar d = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(m.field());
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= factor * m(c, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n))
    throw Error(ErrorKind::NotInvertible, "matrix is singular");
  return e.reduced.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Polynomial char_poly(const Matrix& m0) {
  if (!m0.is_square()) throw Error(ErrorKind::DimensionMismatch, "char_poly of a non-square matrix");
  const Field f = m0.field();
  std::size_t n = m0.rows();
  Matrix h = m0;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    Scalar inv = h(m, m - 1).inverse();
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h(j, m - 1).is_zero()) continue;
      Scalar u = h(j, m - 1) * inv;
      for (std::size_t k = 0; k < n; ++k) h(j, k) -= u * h(m, k);
      for (std::size_t k = 0; k < n; ++k) h(k, m) += u * h(k, j);
    }
  }
  // p_k = char poly of the leading k x k block.
  std::vector<Polynomial> p;
  p.emplace_back(Polynomial::constant(Scalar::one(f)));
  Polynomial x = Polynomial::variable(f);
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = (x - Polynomial::constant(h(k - 1, k - 1))) * p[k - 1];
    Scalar prod = Scalar::one(f);
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      Scalar coeff = h(i, k - 1) * prod;
      if (!coeff.is_zero()) next -= p[i].scaled(coeff);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

namespace {

// Divides out every occurrence of (x - root); returns the multiplicity.
int deflate(Polynomial& f, const Scalar& root) {
  int mult = 0;
  Polynomial lin = Polynomial::linear_factor(root);
  while (f.degree() >= 1 && f.evaluate(root).is_zero()) {
    f = f.divmod(lin).first;
    ++mult;
  }
  return mult;
}

std::vector<mpz_class> divisors(mpz_class n, bool& complete) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  complete = true;
  if (n == 0) return {};
  const mpz_class cap = mpz_class("1000000000000");
  if (n > cap) {
    complete = false;
    return {1};
  }
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Rational candidates for a polynomial whose coefficients are all rational.
std::vector<mpq_class> rational_candidates(const Polynomial& f) {
  mpz_class lcm_den = 1;
  for (const auto& c : f.coeffs()) {
    mpq_class q = c.to_rational();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (const auto& c : f.coeffs()) {
    mpq_class q = c.to_rational() * lcm_den;
    ints.push_back(q.get_num());
  }
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  std::vector<mpq_class> out;
  if (low > 0) out.emplace_back(0);
  if (low >= ints.size()) return out;
  bool c1 = true, c2 = true;
  auto num = divisors(ints[low], c1);
  auto den = divisors(ints.back(), c2);
  for (const auto& a : num)
    for (const auto& b : den) {
      mpq_class q(a, b);
      q.canonicalize();
      out.push_back(q);
      out.push_back(-q);
    }
  return out;
}

bool has_rational_coefficients(const Polynomial& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_prime_field_element()) return false;
  return true;
}

}  // namespace

std::vector<std::pair<Scalar, int>> roots_in_field(const Polynomial& f0, Polynomial* rest) {
  Polynomial f = f0;
  const Field field = f.field();
  std::vector<std::pair<Scalar, int>> roots;
  auto try_root = [&](const Scalar& c) {
    if (f.degree() < 1) return;
    for (const auto& r : roots)
      if (r.first == c) return;
    int m = deflate(f, c);
    if (m > 0) roots.emplace_back(c, m);
  };
  switch (field.kind()) {
    case FieldKind::Finite: {
      std::int64_t p = field.characteristic();
      std::int64_t top = field.degree() == 2 ? p : 1;
      for (std::int64_t a1 = 0; a1 < top && f.degree() >= 1; ++a1)
        for (std::int64_t a0 = 0; a0 < p && f.degree() >= 1; ++a0)
          try_root(Scalar::from_finite_coeffs(field, a0, a1));
      break;
    }
    case FieldKind::Cyclotomic: {
      long order = lcm_long(2, field.conductor());
      Scalar w = Scalar::one(field);
      // The roots of unity in Q(zeta_n) are the powers of -zeta_n (n odd) or zeta_n.
      Scalar g = field.conductor() % 2 == 0 ? Scalar::generator(field) : -Scalar::generator(field);
      for (long k = 0; k < order && f.degree() >= 1; ++k) {
        try_root(w);
        w *= g;
      }
      if (f.degree() >= 1 && has_rational_coefficients(f))
        for (const auto& q : rational_candidates(f)) try_root(Scalar(field, q));
      break;
    }
    case FieldKind::Rational:
      if (f.degree() >= 1)
        for (const auto& q : rational_candidates(f)) try_root(Scalar(field, q));
      break;
  }
  if (rest) *rest = f;
  return roots;
}

JordanData::JordanData(std::vector<JordanBlock> b) : blocks(std::move(b)) {
  ambient_dim = 0;
  for (const auto& x : blocks) ambient_dim += x.length;
  canonicalize();
}

void JordanData::canonicalize() {
  std::stable_sort(blocks.begin(), blocks.end(), [](const JordanBlock& a, const JordanBlock& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue.canonical_less(b.eigenvalue);
    return a.length > b.length;
  });
}

int JordanData::count(const Scalar& eigenvalue, int length) const {
  int c = 0;
  for (const auto& b : blocks)
    if (b.length == length && b.eigenvalue == eigenvalue) ++c;
  return c;
}

std::string JordanData::to_string() const {
  if (blocks.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += " + ";
    out += "J(" + blocks[i].eigenvalue.to_string() + "," + std::to_string(blocks[i].length) + ")";
  }
  return out;
}

JordanData jordan_data(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "jordan_data of a non-square matrix");
  std::size_t n = m.rows();
  Polynomial rest(m.field());
  auto roots = roots_in_field(char_poly(m), &rest);
  if (rest.degree() > 0) throw DoesNotSplit(rest.monic());
  std::vector<JordanBlock> blocks;
  for (const auto& [alpha, mult] : roots) {
    Matrix nil = m - Matrix::scalar(alpha, n);
    std::vector<long> r{static_cast<long>(n)};
    Matrix power = Matrix::identity(m.field(), n);
    long target = static_cast<long>(n) - mult;
    while (r.back() > target) {
      power = power * nil;
      r.push_back(static_cast<long>(rank(power)));
    }
    r.push_back(r.back());
    for (std::size_t k = 1; k + 1 < r.size(); ++k) {
      long exactly = (r[k - 1] - r[k]) - (r[k] - r[k + 1]);
      for (long c = 0; c < exactly; ++c) blocks.push_back({alpha, static_cast<int>(k)});
    }
  }
  return JordanData(std::move(blocks));
}

Matrix jordan_block(const Scalar& eigenvalue, std::size_t length) {
  Matrix j = Matrix::scalar(eigenvalue, length);
  for (std::size_t i = 0; i + 1 < length; ++i) j(i, i + 1) = Scalar::one(eigenvalue.field());
  return j;
}

Matrix jordan_matrix(const JordanData& jd) {
  if (jd.blocks.empty()) return Matrix();
  const Field f = jd.blocks.front().eigenvalue.field();
  Matrix m(f, static_cast<std::size_t>(jd.ambient_dim), static_cast<std::size_t>(jd.ambient_dim));
  std::size_t off = 0;
  for (const auto& b : jd.blocks) {
    m.set_block(off, off, jordan_block(b.eigenvalue, static_cast<std::size_t>(b.length)));
    off += static_cast<std::size_t>(b.length);
  }
  return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "kronecker factors differ in field");
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero()) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

JordanData kronecker_jordan(const Scalar& alpha, int n1, const Scalar& beta, int n2) {
  if (alpha.field() != beta.field()) throw Error(ErrorKind::FieldMismatch, "eigenvalues in different fields");
  if (alpha.field().is_finite())
    throw Error(ErrorKind::PreconditionViolation, "kronecker_jordan needs characteristic zero");
  if (n1 < 1 || n1 > n2) throw Error(ErrorKind::PreconditionViolation, "need 1 <= n1 <= n2");
  if (alpha.is_zero() || beta.is_zero())
    throw Error(ErrorKind::PreconditionViolation, "eigenvalues must be nonzero");
  std::vector<JordanBlock> blocks;
  Scalar ab = alpha * beta;
  for (int i = 0; i < n1; ++i) blocks.push_back({ab, n1 + n2 - 1 - 2 * i});
  return JordanData(std::move(blocks));
}

std::optional<Matrix> conjugacy_solve(const std::vector<Matrix>& ta, const std::vector<Matrix>& tb) {
  if (ta.size() != tb.size() || ta.empty())
    throw Error(ErrorKind::DimensionMismatch, "conjugacy_solve needs equal non-empty lists");
  const Field f = ta[0].field();
  std::size_t d = ta[0].rows();
  for (std::size_t k = 0; k < ta.size(); ++k) {
    if (ta[k].field() != f || tb[k].field() != f)
      throw Error(ErrorKind::FieldMismatch, "conjugacy_solve fields differ");
    if (ta[k].rows() != d || tb[k].rows() != d || !ta[k].is_square() || !tb[k].is_square())
      throw Error(ErrorKind::DimensionMismatch, "conjugacy_solve dimensions differ");
  }
  if (d == 0) return Matrix(f, 0, 0);
  // Unknown X with x_{ab} at index a*d+b; equations (TA X - X TB)_{ac} = 0.
  Matrix eq(f, ta.size() * d * d, d * d);
  for (std::size_t k = 0; k < ta.size(); ++k)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t c = 0; c < d; ++c) {
        std::size_t row = k * d * d + a * d + c;
        for (std::size_t b = 0; b < d; ++b) {
          eq(row, b * d + c) += ta[k](a, b);
          eq(row, a * d + b) -= tb[k](b, c);
        }
      }
  auto sol = nullspace(eq);
  if (sol.empty()) return std::nullopt;
  std::vector<Matrix> basis;
  for (const auto& v : sol) {
    Matrix x(f, d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) x(a, b) = v[a * d + b];
    if (is_invertible(x)) return x;
    basis.push_back(std::move(x));
  }
  // det(sum t^k X_k) is a polynomial in t of degree <= d(K-1); if it is not
  // identically zero one of the first d(K-1)+1 values of t is not a root.
  long trials = static_cast<long>(d * (basis.size() - 1)) + 1;
  if (f.is_finite()) trials = std::min<long>(trials, f.size() - 1);
  for (long t = 1; t <= trials; ++t) {
    Scalar ts(f, t), w = Scalar::one(f);
    Matrix x(f, d, d);
    for (const auto& b : basis) {
      x += w * b;
      w *= ts;
    }
    if (is_invertible(x)) return x;
  }
  // det can vanish on that curve while a generic combination is invertible;
  // fall back to pseudo-random coefficients (fixed seed, results verified).
  std::mt19937_64 gen(0x6d636f6e76ULL);
  std::uniform_int_distribution<long> coef(-64, 64);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix x(f, d, d);
    for (const auto& b : basis) x += Scalar(f, coef(gen)) * b;
    if (is_invertible(x)) return x;
  }
  return std::nullopt;
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<RowVector>& vectors) {
  Subspace s(f, ambient);
  for (const auto& v : vectors) s.add(v);
  return s;
}

Subspace Subspace::row_space(const Matrix& m) { return span(m.field(), m.cols(), m.row_list()); }

RowVector Subspace::residue(RowVector v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length vs subspace");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    const RowVector& b = basis_[i];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!b[j].is_zero()) v[j] -= c * b[j];
  }
  return v;
}

bool Subspace::add(const RowVector& v0) {
  RowVector v = residue(v0);
  std::size_t c = 0;
  while (c < ambient_ && v[c].is_zero()) ++c;
  if (c == ambient_) return false;
  Scalar inv = v[c].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  for (auto& b : basis_) {
    if (b[c].is_zero()) continue;
    Scalar factor = b[c];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!v[j].is_zero()) b[j] -= factor * v[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, c);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const RowVector& v) const { return is_zero_vector(residue(v)); }

bool Subspace::contains(const Subspace& s) const {
  for (const auto& v : s.basis())
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces in different spaces");
  Subspace out(field_, ambient_);
  if (dim() == 0 || o.dim() == 0) return out;
  std::vector<RowVector> stacked = basis_;
  stacked.insert(stacked.end(), o.basis_.begin(), o.basis_.end());
  auto rel = kernel_basis(Matrix::from_rows(field_, stacked, ambient_));
  for (const auto& a : rel) {
    RowVector v = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!a[i].is_zero())
        for (std::size_t j = 0; j < ambient_; ++j) v[j] += a[i] * basis_[i][j];
    out.add(v);
  }
  return out;
}

Subspace Subspace::sum(const Subspace& o) const {
  Subspace out = *this;
  for (const auto& v : o.basis_) out.add(v);
  return out;
}

Coordinates::Coordinates(Field f, std::size_t ambient, const std::vector<RowVector>& basis)
    : field_(f), ambient_(ambient) {
  std::size_t k = basis.size();
  Matrix aug(f, k, ambient + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < ambient; ++j) aug(i, j) = basis[i][j];
    aug(i, ambient + i) = Scalar::one(f);
  }
  echelon_ = rref(std::move(aug));
  if (echelon_.pivots.size() != k || (k > 0 && echelon_.pivots.back() >= ambient))
    throw Error(ErrorKind::DimensionInconsistency, "coordinate basis is not independent");
  transform_ = echelon_.reduced.block(0, ambient, k, k);
}

RowVector Coordinates::of(const RowVector& y) const {
  std::size_t k = transform_.rows();
  RowVector b(k, Scalar::zero(field_));
  for (std::size_t i = 0; i < k; ++i) b[i] = y[echelon_.pivots[i]];
  // Check y lies in the span: y == b * R.
  RowVector check = zero_vector(field_, ambient_);
  for (std::size_t i = 0; i < k; ++i)
    if (!b[i].is_zero())
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!echelon_.reduced(i, j).is_zero()) check[j] += b[i] * echelon_.reduced(i, j);
  if (check != y) throw Error(ErrorKind::DimensionInconsistency, "vector outside the coordinate span");
  return b * transform_;
}

}  // namespace mconv

namespace mconv {

namespace {

RowVector flatten(const Matrix& m) {
  RowVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

std::size_t enveloping_algebra_dimension(const std::vector<Matrix>& gens) {
  if (gens.empty()) return 1;
  const Field f = gens[0].field();
  const std::size_t d = gens[0].rows();
  Subspace span(f, d * d);
  std::vector<Matrix> frontier{Matrix::identity(f, d)};
  span.add(flatten(frontier[0]));
  while (!frontier.empty() && span.dim() < d * d) {
    std::vector<Matrix> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        Matrix prod = a * g;
        if (span.add(flatten(prod))) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return span.dim();
}

bool absolutely_irreducible(const std::vector<Matrix>& gens) {
  if (gens.empty()) return false;
  const std::size_t d = gens[0].rows();
  return enveloping_algebra_dimension(gens) == d * d;
}

std::size_t centralizer_dimension(const std::vector<Matrix>& gens) {
  if (gens.empty()) return 0;
  const Field f = gens[0].field();
  const std::size_t d = gens[0].rows();
  Matrix eq(f, gens.size() * d * d, d * d);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t c = 0; c < d; ++c) {
        std::size_t row = k * d * d + a * d + c;
        for (std::size_t b = 0; b < d; ++b) {
          eq(row, a * d + b) += gens[k](b, c);  // (X g)_{ac}
          eq(row, b * d + c) -= gens[k](a, b);  // (g X)_{ac}
        }
      }
  return nullspace(eq).size();
}

}  // namespace mconv
