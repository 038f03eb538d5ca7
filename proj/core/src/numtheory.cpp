#include "mconv/numtheory.hpp"

#include <numeric>

#include "mconv/error.hpp"

namespace mconv {

std::int64_t mod_normalize(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a = mod_normalize(a, m);
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = mod_normalize(a, p);
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "zero has no inverse mod p");
  std::int64_t g = p, x = 0, x1 = 1, b = a;
  while (b != 0) {
    std::int64_t t = g / b;
    std::int64_t tmp = g - t * b;
    g = b;
    b = tmp;
    tmp = x - t * x1;
    x = x1;
    x1 = tmp;
  }
  return mod_normalize(x, p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int legendre(std::int64_t a, std::int64_t p) {
  a = mod_normalize(a, p);
  if (a == 0) return 0;
  return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::int64_t least_nonresidue(std::int64_t p) {
  for (std::int64_t a = 2; a < p; ++a)
    if (legendre(a, p) == -1) return a;
  throw Error(ErrorKind::BadPrime, "no quadratic non-residue modulo " + std::to_string(p));
}

long euler_phi(long n) {
  long result = n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace mconv
