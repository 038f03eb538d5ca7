#include "mconv/modgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "mconv/error.hpp"
#include "mconv/linalg.hpp"
#include "mconv/numtheory.hpp"

namespace mconv {

namespace {

void require_prime(std::int64_t ell) {
  if (ell < 2 || !is_prime(ell))
    throw Error(ErrorKind::BadPrime, std::to_string(ell) + " is not a prime");
}

std::int64_t reduce_rational(const mpq_class& v, std::int64_t ell) {
  mpz_class num = v.get_num() % ell;
  mpz_class den = v.get_den() % ell;
  if (den == 0)
    throw Error(ErrorKind::BadPrime,
                "denominator of " + v.get_str() + " is divisible by " + std::to_string(ell));
  std::int64_t a = mod_normalize(num.get_si(), ell);
  return mul_mod(a, inv_mod(den.get_si(), ell), ell);
}

int multiplicative_order(std::int64_t a, long n) {
  std::int64_t x = mod_normalize(a, n);
  for (int k = 1; k <= n; ++k) {
    if (x == 1 % n) return k;
    x = mul_mod(x, a, n);
  }
  return 0;
}

// Packed finite-field matrices: element c0 + c1 t is stored as c0 + p c1.
struct Packed {
  std::int64_t p = 0;
  int k = 1;
  std::int64_t c0 = 0, c1 = 0;  // t^2 = -c1 t - c0
  std::size_t d = 0;

  explicit Packed(const Field& f, std::size_t dim)
      : p(f.characteristic()), k(f.degree()), d(dim) {
    if (k == 2) {
      c0 = f.quad_c0();
      c1 = f.quad_c1();
    }
  }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (k == 1) return static_cast<std::uint32_t>((std::uint64_t(x) * y) % std::uint64_t(p));
    std::int64_t x0 = x % p, x1 = x / p, y0 = y % p, y1 = y / p;
    std::int64_t a0 = x0 * y0 % p, a1 = (x0 * y1 + x1 * y0) % p, a2 = x1 * y1 % p;
    std::int64_t r0 = mod_normalize(a0 - a2 * c0, p);
    std::int64_t r1 = mod_normalize(a1 - a2 * c1, p);
    return static_cast<std::uint32_t>(r0 + p * r1);
  }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    if (k == 1) return static_cast<std::uint32_t>((x + y) % p);
    std::int64_t r0 = (x % p + y % p) % p, r1 = (x / p + y / p) % p;
    return static_cast<std::uint32_t>(r0 + p * r1);
  }

  std::uint32_t pack(const Scalar& s) const {
    return static_cast<std::uint32_t>(s.finite_coeff(0) + (k == 2 ? p * s.finite_coeff(1) : 0));
  }
  Scalar unpack(const Field& f, std::uint32_t x) const {
    return k == 1 ? Scalar::from_finite_coeffs(f, x) : Scalar::from_finite_coeffs(f, x % p, x / p);
  }

  std::vector<std::uint32_t> pack(const Matrix& m) const {
    std::vector<std::uint32_t> out(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] = pack(m(i, j));
    return out;
  }
  Matrix unpack(const Field& f, const std::vector<std::uint32_t>& v) const {
    Matrix m(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = unpack(f, v[i * d + j]);
    return m;
  }

  std::vector<std::uint32_t> identity() const {
    std::vector<std::uint32_t> id(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) id[i * d + i] = 1;
    return id;
  }

  void multiply(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                std::vector<std::uint32_t>& out) const {
    out.assign(d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l) {
        std::uint32_t x = a[i * d + l];
        if (x == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
          out[i * d + j] = add(out[i * d + j], mul(x, b[l * d + j]));
      }
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

void check_generators(const std::vector<Matrix>& gens) {
  if (gens.empty()) throw Error(ErrorKind::PreconditionViolation, "no generators");
  const Field f = gens[0].field();
  if (!f.is_finite())
    throw Error(ErrorKind::FieldMismatch, "group closure needs a finite field");
  for (const auto& g : gens) {
    if (g.field() != f) throw Error(ErrorKind::FieldMismatch, "generators over different fields");
    if (!g.is_square() || g.rows() != gens[0].rows())
      throw Error(ErrorKind::DimensionMismatch, "generators of different sizes");
  }
}

template <class Visit>
std::optional<std::uint64_t> closure_walk(const std::vector<Matrix>& gens, std::uint64_t cap,
                                          Visit visit) {
  check_generators(gens);
  Packed pk(gens[0].field(), gens[0].rows());
  std::vector<std::vector<std::uint32_t>> pg;
  for (const auto& g : gens) pg.push_back(pk.pack(g));

  std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
  std::deque<std::vector<std::uint32_t>> queue;
  auto id = pk.identity();
  seen.insert(id);
  visit(pk, id);
  queue.push_back(std::move(id));
  std::vector<std::uint32_t> prod;
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : pg) {
      pk.multiply(cur, g, prod);
      if (seen.insert(prod).second) {
        if (seen.size() > cap) return std::nullopt;
        visit(pk, prod);
        queue.push_back(prod);
      }
    }
  }
  return seen.size();
}

}  // namespace

Field reduction_field(const Field& source, std::int64_t ell) {
  require_prime(ell);
  if (source.is_rational()) return Field::finite(ell);
  if (!source.is_cyclotomic())
    throw Error(ErrorKind::FieldMismatch, "reduction needs a rational or cyclotomic field");
  const long n = source.conductor();
  if (n % ell == 0)
    throw Error(ErrorKind::BadPrime,
                std::to_string(ell) + " divides the conductor " + std::to_string(n));
  const int deg = multiplicative_order(ell, n);
  if (deg == 1) return Field::finite(ell);
  if (deg == 2) return Field::finite(ell, 2);
  throw Error(ErrorKind::NoRootInQuadratic,
              "Phi_" + std::to_string(n) + " has no root in F_" + std::to_string(ell) +
                  "^2; roots need degree " + std::to_string(deg));
}

Scalar reduction_of_generator(const Field& source, std::int64_t ell) {
  const Field target = reduction_field(source, ell);
  if (source.is_rational()) return Scalar::one(target);
  const auto& phi = source.cyclotomic_poly();
  auto is_root = [&](const Scalar& z) {
    Scalar acc = Scalar::zero(target);
    for (auto it = phi.rbegin(); it != phi.rend(); ++it)
      acc = acc * z + Scalar(target, mpq_class(*it));
    return acc.is_zero();
  };
  if (target.degree() == 1) {
    for (std::int64_t x = 1; x < ell; ++x) {
      Scalar z = Scalar::from_finite_coeffs(target, x);
      if (is_root(z)) return z;
    }
  } else {
    for (std::int64_t a1 = 1; a1 < ell; ++a1)
      for (std::int64_t a0 = 0; a0 < ell; ++a0) {
        Scalar z = Scalar::from_finite_coeffs(target, a0, a1);
        if (is_root(z)) return z;
      }
  }
  throw Error(ErrorKind::NoRootInQuadratic, "no root of the cyclotomic polynomial found");
}

namespace {

Scalar reduce_with(const Scalar& s, const Field& target, const Scalar& zeta, std::int64_t ell) {
  const auto& c = s.rational_coeffs();
  Scalar acc = Scalar::zero(target);
  for (std::size_t i = c.size(); i-- > 0;)
    acc = acc * zeta + Scalar::from_finite_coeffs(target, reduce_rational(c[i], ell));
  return acc;
}

}  // namespace

Scalar reduce_mod(const Scalar& s, std::int64_t ell) {
  const Field target = reduction_field(s.field(), ell);
  return reduce_with(s, target, reduction_of_generator(s.field(), ell), ell);
}

Matrix reduce_mod(const Matrix& m, std::int64_t ell) {
  const Field target = reduction_field(m.field(), ell);
  const Scalar zeta = reduction_of_generator(m.field(), ell);
  Matrix out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = reduce_with(m(i, j), target, zeta, ell);
  return out;
}

MonodromyTuple reduce_mod(const MonodromyTuple& t, std::int64_t ell) {
  std::vector<Matrix> entries;
  for (const auto& e : t.entries()) entries.push_back(reduce_mod(e, ell));
  // Points are rational coordinates on the line; they only matter in char 0.
  return MonodromyTuple(std::move(entries));
}

ClosureResult group_closure(const std::vector<Matrix>& gens, std::uint64_t cap) {
  ClosureResult res;
  res.order = closure_walk(gens, cap, [&](const Packed&, const auto&) { ++res.visited; });
  return res;
}

std::vector<Matrix> group_elements(const std::vector<Matrix>& gens, std::uint64_t cap) {
  std::vector<Matrix> out;
  const Field f = gens.empty() ? Field::rational() : gens[0].field();
  auto order = closure_walk(gens, cap, [&](const Packed& pk, const std::vector<std::uint32_t>& v) {
    out.push_back(pk.unpack(f, v));
  });
  if (!order) throw Error(ErrorKind::PreconditionViolation, "group exceeds the element cap");
  return out;
}

std::uint64_t element_order(const Matrix& g, std::uint64_t bound) {
  check_generators({g});
  Packed pk(g.field(), g.rows());
  const auto id = pk.identity();
  const auto pg = pk.pack(g);
  auto cur = pg;
  std::vector<std::uint32_t> next;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (cur == id) return k;
    pk.multiply(cur, pg, next);
    cur.swap(next);
  }
  return 0;
}

mpz_class general_linear_order(std::size_t d, std::int64_t q) {
  mpz_class qd, qi = 1, out = 1;
  mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q), d);
  for (std::size_t i = 0; i < d; ++i) {
    out *= qd - qi;
    qi *= q;
  }
  return out;
}

bool group_absolutely_irreducible(const std::vector<Matrix>& gens) {
  return absolutely_irreducible(gens);
}

PrimitivityReport primitivity_bound(const MonodromyTuple& t) {
  if (!absolutely_irreducible(t.entries()))
    throw Error(ErrorKind::PreconditionViolation,
                "entries do not generate an absolutely irreducible group");
  const Field f = t.field();
  const std::int64_t p = f.characteristic();
  const std::size_t n = t.dim();
  const Matrix id = Matrix::identity(f, n);

  PrimitivityReport rep;
  rep.n = n;
  std::vector<std::size_t> semisimple_ranks;
  for (const auto& e : t.entries()) {
    const std::size_t rk = rank(e - id);
    rep.m += rk;
    const JordanData jd = jordan_data(e);
    bool semisimple = true, unipotent = true;
    std::size_t prime_to_p = 0;
    for (const auto& blk : jd.blocks) {
      const auto len = static_cast<std::size_t>(blk.length);
      if (len > 1) semisimple = false;
      if (!blk.eigenvalue.is_one()) unipotent = false;
      if (p == 0 || len % static_cast<std::size_t>(p) != 0) {
        rep.x = std::max(rep.x, len);
        prime_to_p += len;
      }
    }
    if (semisimple) semisimple_ranks.push_back(rk);
    if (unipotent) rep.b += prime_to_p;
  }
  for (std::size_t v = 1; v <= n; ++v) {
    std::size_t a = 0;
    for (auto rk : semisimple_ranks)
      if (rk < v) a += rk;
    // v >= n - m/2 + (a+b)/2, doubled to stay in integers
    const long lhs = 2 * static_cast<long>(v);
    const long rhs = 2 * static_cast<long>(n) - static_cast<long>(rep.m) +
                     static_cast<long>(a + rep.b);
    if (v >= rep.x && lhs >= rhs) {
      rep.bound = v;
      break;
    }
  }
  rep.primitive = !rep.bound || 2 * *rep.bound > n;
  return rep;
}

std::optional<Matrix> invariant_symmetric_form(const std::vector<Matrix>& gens) {
  if (gens.empty()) return std::nullopt;
  const Field f = gens[0].field();
  const std::size_t d = gens[0].rows();
  // Unknowns: G_{ab} with a <= b.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::vector<std::size_t>> slot_of(d, std::vector<std::size_t>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      slot_of[a][b] = slot_of[b][a] = slots.size();
      slots.emplace_back(a, b);
    }
  const std::size_t nu = slots.size();
  // (g^T G g)_{ij} = sum_{a,b} g_{ai} G_{ab} g_{bj}; one equation per i <= j.
  Matrix eq(f, gens.size() * nu, nu);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Matrix& g = gens[k];
    for (std::size_t e = 0; e < nu; ++e) {
      const auto [i, j] = slots[e];
      const std::size_t row = k * nu + e;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) eq(row, slot_of[a][b]) += g(a, i) * g(b, j);
      eq(row, e) -= Scalar::one(f);
    }
  }
  const auto sols = nullspace(eq);
  if (sols.empty()) return std::nullopt;
  auto to_matrix = [&](const RowVector& v) {
    Matrix m(f, d, d);
    for (std::size_t e = 0; e < nu; ++e) m(slots[e].first, slots[e].second) = m(slots[e].second, slots[e].first) = v[e];
    return m;
  };
  for (const auto& s : sols) {
    Matrix m = to_matrix(s);
    if (!det(m).is_zero()) return m;
  }
  // A generic combination is non-degenerate whenever any member is.
  for (long t = 2; t < 64; ++t) {
    RowVector v = zero_vector(f, nu);
    Scalar c = Scalar::one(f), ts(f, t);
    for (const auto& s : sols) {
      v = add(v, scale(s, c));
      c *= ts;
    }
    Matrix m = to_matrix(v);
    if (!det(m).is_zero()) return m;
  }
  return to_matrix(sols.front());
}

GroupReport o3_recognition(const std::vector<Matrix>& gens, std::int64_t ell, std::uint64_t cap) {
  require_prime(ell);
  if (ell == 2) throw Error(ErrorKind::BadPrime, "orthogonal recognition needs odd ell");
  check_generators(gens);
  if (gens[0].rows() != 3)
    throw Error(ErrorKind::DimensionMismatch, "orthogonal recognition needs dimension 3");
  if (gens[0].field().characteristic() != ell || gens[0].field().degree() != 1)
    throw Error(ErrorKind::FieldMismatch, "generators must be over F_" + std::to_string(ell));

  GroupReport rep;
  auto gram = invariant_symmetric_form(gens);
  if (!gram || det(*gram).is_zero())
    throw Error(ErrorKind::NoInvariantForm, "no non-degenerate invariant symmetric form");
  rep.invariant_gram = std::move(gram);
  rep.absolutely_irreducible = absolutely_irreducible(gens);
  rep.order = group_closure(gens, cap).order;
  const std::uint64_t l = static_cast<std::uint64_t>(ell);
  if (rep.order && *rep.order == 2 * l * (l * l - 1))
    rep.recognized = "O3(F_" + std::to_string(ell) + ")";
  return rep;
}

}  // namespace mconv
