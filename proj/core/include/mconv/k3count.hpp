#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "mconv/numtheory.hpp"
#include "mconv/polynomial.hpp"

namespace mconv {

// A prime power p or p^2 with p > 3.
struct PrimePower {
  std::int64_t p = 0;
  int k = 1;
  std::int64_t q() const { return k == 1 ? p : p * p; }
};
PrimePower parse_prime_power(std::int64_t q);

// (a/q) for q = p or p^2, extended multiplicatively.
int legendre_q(std::int64_t a, const PrimePower& q);

struct CountRecord {
  std::int64_t q = 0;
  std::int64_t N = 0;
  mpq_class trace;
  std::int64_t character_sum = 0;  // N = q^2 + character_sum
};

// #{(w,x,y) in F_q^3 : w^2 = (x^2-1)((y-x)^2-1)(y-z)}.
std::int64_t count_affine(std::int64_t q, const mpq_class& z = 1, unsigned threads = 1);

mpq_class trace_from_count(std::int64_t q, std::int64_t N);
mpq_class trace_frobenius(std::int64_t q, const mpq_class& z = 1, unsigned threads = 1);
CountRecord count_record(std::int64_t q, const mpq_class& z = 1, unsigned threads = 1);

struct FrobeniusData {
  std::int64_t p = 0;
  int s3 = 0;
  int s_minus1 = 0;
  mpq_class u;
  mpq_class d;  // alpha = (u + sqrt(d)) / p
  mpq_class t_p;
  mpq_class t_p2;
  bool verified = false;
  // Whether the opposite sign would also pass the t_{p^2} check.
  bool other_sign_verifies = false;
  std::string alpha_text() const;
};

// Candidate (u, d) for a given sign s of the third eigenvalue.
bool frobenius_sign_verifies(std::int64_t p, int sign, const mpq_class& t_p, const mpq_class& t_p2);
FrobeniusData frobenius_eigenvalues(std::int64_t p, unsigned threads = 1);

// The 19x19 intersection matrix of the resolved K3 fibre with P18.P19 = x,
// entries as polynomials in x over Q.
std::vector<std::vector<Polynomial>> intersection_matrix();
// Fraction-free determinant of a square matrix over Q[x].
Polynomial polynomial_det(std::vector<std::vector<Polynomial>> m);
Polynomial intersection_matrix_det();

}  // namespace mconv
