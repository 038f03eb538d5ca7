#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mconv {

enum class FieldKind { Rational, Cyclotomic, Finite };

namespace detail {
struct FieldData;
}

// Ambient field tag. Fields are interned, so copies are a pointer and
// equality is identity.
class Field {
 public:
  static Field rational();
  static Field cyclotomic(int n);
  // F_p (k = 1) or F_{p^2} with the default polynomial t^2 - a, a the least
  // quadratic non-residue.
  static Field finite(std::int64_t p, int k = 1);
  // F_{p^2} = F_p[t]/(t^2 + c1 t + c0); throws unless the polynomial is
  // irreducible.
  static Field finite_quadratic(std::int64_t p, std::int64_t c0, std::int64_t c1);
  // rational | cyclotomic:<n> | finite:<p>[,<k>]
  static Field parse(std::string_view text);

  Field() : Field(rational()) {}

  FieldKind kind() const;
  bool is_rational() const { return kind() == FieldKind::Rational; }
  bool is_cyclotomic() const { return kind() == FieldKind::Cyclotomic; }
  bool is_finite() const { return kind() == FieldKind::Finite; }

  // Cyclotomic order n (1 for other kinds).
  int conductor() const;
  // Dimension over the prime field: 1, phi(n) or k.
  int degree() const;
  // 0 for characteristic zero.
  std::int64_t characteristic() const;
  // q = p^k for finite fields, 0 otherwise.
  std::int64_t size() const;
  // For F_{p^2}: t^2 = -c1 t - c0.
  std::int64_t quad_c0() const;
  std::int64_t quad_c1() const;
  // Integer coefficients of Phi_n, low to high (cyclotomic only).
  const std::vector<mpz_class>& cyclotomic_poly() const;

  std::string to_string() const;

  bool operator==(const Field& o) const { return d_ == o.d_; }
  bool operator!=(const Field& o) const { return d_ != o.d_; }

  const detail::FieldData* data() const { return d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_;
};

class Scalar {
 public:
  Scalar() : Scalar(Field::rational()) {}
  explicit Scalar(Field f);  // zero of f
  Scalar(Field f, long value);
  Scalar(Field f, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  // zeta_n for cyclotomic fields, t for F_{p^2}.
  static Scalar generator(Field f);
  // From raw coefficients (reduced on construction).
  static Scalar from_rational_coeffs(Field f, std::vector<mpq_class> coeffs);
  static Scalar from_finite_coeffs(Field f, std::int64_t c0, std::int64_t c1 = 0);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  // True when the value lies in the prime field (Q or F_p).
  bool is_prime_field_element() const;

  // Coefficient vectors. Rational/cyclotomic: length degree(); finite: length k.
  const std::vector<mpq_class>& rational_coeffs() const { return q_; }
  std::int64_t finite_coeff(int i) const { return f_[static_cast<std::size_t>(i)]; }
  // The rational value (requires is_prime_field_element in char 0).
  mpq_class to_rational() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }
  // Total order on canonical forms, used only to sort deterministically.
  bool canonical_less(const Scalar& b) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void check_same(const Scalar& b) const;
  void reduce_cyclotomic(std::vector<mpq_class>& poly) const;

  Field field_;
  std::vector<mpq_class> q_;
  std::array<std::int64_t, 2> f_{0, 0};
};

Scalar parse_scalar(std::string_view text, const Field& field);
inline std::string format_scalar(const Scalar& s) { return s.to_string(); }

// Coercion maps. Q -> anything; Q(zeta_m) -> Q(zeta_n) for m | n.
Scalar embed(const Scalar& s, const Field& target);
bool embeds_into(const Field& from, const Field& to);

// Smallest multiplicative order n with s^n = 1, or 0 if s is not a root of
// unity of order <= bound.
long root_of_unity_order(const Scalar& s, long bound);

}  // namespace mconv

template <>
struct std::hash<mconv::Scalar> {
  std::size_t operator()(const mconv::Scalar& s) const { return s.hash(); }
};
