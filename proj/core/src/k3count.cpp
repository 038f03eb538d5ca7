#include "mconv/k3count.hpp"

#include <vector>

#include "mconv/error.hpp"
#include "mconv/parallel.hpp"
#include "mconv/scalar.hpp"

namespace mconv {

PrimePower parse_prime_power(std::int64_t q) {
  if (q < 2) throw Error(ErrorKind::BadPrime, std::to_string(q) + " is not a prime power");
  PrimePower pp;
  if (is_prime(q)) {
    pp = {q, 1};
  } else {
    std::int64_t r = 1;
    while ((r + 1) * (r + 1) <= q) ++r;
    if (r * r != q || !is_prime(r))
      throw Error(ErrorKind::BadPrime, std::to_string(q) + " is neither p nor p^2");
    pp = {r, 2};
  }
  if (pp.p <= 3)
    throw Error(ErrorKind::SmallPrime, "characteristic " + std::to_string(pp.p) + " is too small");
  return pp;
}

int legendre_q(std::int64_t a, const PrimePower& q) {
  const int l = legendre(a, q.p);
  return q.k == 1 ? l : l * l;
}

namespace {

// F_q with q = p or p^2; elements packed as c0 + p c1, t^2 = -c1 t - c0.
struct SmallField {
  std::int64_t p;
  int k;
  std::int64_t c0 = 0, c1 = 0;
  std::vector<signed char> chi;

  explicit SmallField(const PrimePower& pp) : p(pp.p), k(pp.k) {
    if (k == 2) {
      const Field f = Field::finite(p, 2);
      c0 = f.quad_c0();
      c1 = f.quad_c1();
    }
    std::vector<signed char> chi_p(static_cast<std::size_t>(p), -1);
    chi_p[0] = 0;
    for (std::int64_t a = 1; a < p; ++a) chi_p[static_cast<std::size_t>(a * a % p)] = 1;
    const std::int64_t q = pp.q();
    chi.resize(static_cast<std::size_t>(q));
    for (std::int64_t e = 0; e < q; ++e) {
      const std::int64_t a = e % p, b = e / p;
      // Over F_{p^2}, chi is the Legendre symbol of the norm a^2 - c1 a b + c0 b^2.
      const std::int64_t n = k == 1 ? a : mod_normalize(a * a - c1 * a % p * b + c0 * b % p * b, p);
      chi[static_cast<std::size_t>(e)] = chi_p[static_cast<std::size_t>(n)];
    }
  }

  std::int64_t pack(std::int64_t a, std::int64_t b) const { return a + p * b; }
  std::int64_t sub(std::int64_t x, std::int64_t y) const {
    return pack(mod_normalize(x % p - y % p, p), mod_normalize(x / p - y / p, p));
  }
  std::int64_t mul(std::int64_t x, std::int64_t y) const {
    const std::int64_t x0 = x % p, x1 = x / p, y0 = y % p, y1 = y / p;
    if (k == 1) return x0 * y0 % p;
    const std::int64_t a0 = x0 * y0 % p, a1 = (x0 * y1 + x1 * y0) % p, a2 = x1 * y1 % p;
    return pack(mod_normalize(a0 - a2 * c0, p), mod_normalize(a1 - a2 * c1, p));
  }
};

std::int64_t reduce_point(const mpq_class& z, std::int64_t p) {
  mpz_class num = z.get_num() % p, den = z.get_den() % p;
  if (den == 0) throw Error(ErrorKind::BadPrime, "fibre parameter has denominator divisible by p");
  return mul_mod(mod_normalize(num.get_si(), p), inv_mod(den.get_si(), p), p);
}

}  // namespace

std::int64_t count_affine(std::int64_t q, const mpq_class& z, unsigned threads) {
  const PrimePower pp = parse_prime_power(q);
  const SmallField F(pp);
  const std::int64_t zz = reduce_point(z, pp.p);
  const std::int64_t one = 1;
  // One partial character sum per x; combined in x order.
  std::vector<std::int64_t> partial(static_cast<std::size_t>(q), 0);
  parallel_for(static_cast<std::size_t>(q), threads, [&](std::size_t xi) {
    const auto x = static_cast<std::int64_t>(xi);
    const std::int64_t a = F.sub(F.mul(x, x), one);
    std::int64_t s = 0;
    if (a != 0) {
      for (std::int64_t y = 0; y < q; ++y) {
        const std::int64_t yx = F.sub(y, x);
        const std::int64_t f = F.mul(F.mul(a, F.sub(F.mul(yx, yx), one)), F.sub(y, zz));
        s += F.chi[static_cast<std::size_t>(f)];
      }
    }
    partial[xi] = s;
  });
  std::int64_t sum = 0;
  for (auto s : partial) sum += s;
  return q * q + sum;
}

mpq_class trace_from_count(std::int64_t q, std::int64_t N) {
  const PrimePower pp = parse_prime_power(q);
  mpz_class qq = q;
  return mpq_class(mpz_class(N) + qq - qq * qq - (1 + legendre_q(-1, pp)) * qq);
}

mpq_class trace_frobenius(std::int64_t q, const mpq_class& z, unsigned threads) {
  return trace_from_count(q, count_affine(q, z, threads));
}

CountRecord count_record(std::int64_t q, const mpq_class& z, unsigned threads) {
  CountRecord rec;
  rec.q = q;
  rec.N = count_affine(q, z, threads);
  rec.character_sum = rec.N - q * q;
  rec.trace = trace_from_count(q, rec.N);
  return rec;
}

bool frobenius_sign_verifies(std::int64_t p, int sign, const mpq_class& t_p, const mpq_class& t_p2) {
  // alpha + 1/alpha = 2u/p, so alpha^2 + alpha^-2 + 1 = t_{p^2}/p^2 reads
  // 4u^2 - p^2 = t_{p^2}.
  const mpq_class u = (t_p - sign * mpq_class(p)) / 2;
  return 4 * u * u - mpq_class(p) * p == t_p2;
}

FrobeniusData frobenius_eigenvalues(std::int64_t p, unsigned threads) {
  if (!is_prime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not a prime");
  if (p <= 3) throw Error(ErrorKind::SmallPrime, "p must exceed 3");
  FrobeniusData fd;
  fd.p = p;
  fd.s3 = legendre(3, p);
  fd.s_minus1 = legendre(-1, p);
  fd.t_p = trace_frobenius(p, 1, threads);
  fd.t_p2 = trace_frobenius(p * p, 1, threads);
  fd.u = (fd.t_p - fd.s3 * mpq_class(p)) / 2;
  fd.d = fd.u * fd.u - mpq_class(p) * p;
  fd.verified = frobenius_sign_verifies(p, fd.s3, fd.t_p, fd.t_p2);
  fd.other_sign_verifies = frobenius_sign_verifies(p, -fd.s3, fd.t_p, fd.t_p2);
  if (!fd.verified && !fd.other_sign_verifies)
    throw Error(ErrorKind::VerificationFailed,
                "t_{p^2} check fails for both signs at p=" + std::to_string(p));
  return fd;
}

std::string FrobeniusData::alpha_text() const {
  if (d == 0) {
    mpq_class a = u / p;
    return a.get_str();
  }
  return "(" + u.get_str() + "+sqrt(" + d.get_str() + "))/" + std::to_string(p);
}

std::vector<std::vector<Polynomial>> intersection_matrix() {
  const Field Q = Field::rational();
  const std::size_t n = 19;
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(Q)));
  auto set = [&](std::size_t i, std::size_t j, long v) {
    m[i][j] = m[j][i] = Polynomial::constant(Scalar(Q, v));
  };
  for (std::size_t i = 0; i < n; ++i) set(i, i, -2);
  // Three nodal curves meet both components over the line y = 0.
  for (std::size_t i = 0; i < 3; ++i) {
    set(i, 17, 1);
    set(i, 18, 1);
  }
  // Two D4 configurations over the triple points.
  for (std::size_t c : {9u, 13u})
    for (std::size_t leg = 1; leg <= 3; ++leg) set(c, c + leg, 1);
  m[17][18] = m[18][17] = Polynomial::variable(Q);
  return m;
}

Polynomial polynomial_det(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  const Field f = n ? m[0][0].field() : Field::rational();
  if (n == 0) return Polynomial::constant(Scalar::one(f));
  Polynomial prev = Polynomial::constant(Scalar::one(f));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return Polynomial(f);
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        auto [quo, rem] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divmod(prev);
        if (!rem.is_zero())
          throw Error(ErrorKind::VerificationFailed, "inexact Bareiss division");
        m[i][j] = std::move(quo);
      }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Polynomial intersection_matrix_det() { return polynomial_det(intersection_matrix()); }

}  // namespace mconv
