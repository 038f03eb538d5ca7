#pragma once

#include <cstdint>

namespace mconv {

std::int64_t mod_normalize(std::int64_t a, std::int64_t m);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m);
// Inverse of a modulo prime p; a must be nonzero mod p.
std::int64_t inv_mod(std::int64_t a, std::int64_t p);
bool is_prime(std::int64_t n);
// Legendre symbol via Euler's criterion; p an odd prime.
int legendre(std::int64_t a, std::int64_t p);
std::int64_t least_nonresidue(std::int64_t p);
long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace mconv
