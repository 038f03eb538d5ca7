#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mconv/scalar.hpp"

namespace mconv {

// Dense univariate polynomial over a Field, coefficients low to high,
// normalized so the leading coefficient is nonzero.
class Polynomial {
 public:
  explicit Polynomial(Field f) : field_(f) {}
  Polynomial(Field f, std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c);
  static Polynomial variable(Field f);
  // x - root
  static Polynomial linear_factor(const Scalar& root);
  static Polynomial from_ints(Field f, const std::vector<long>& coeffs);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(std::size_t i) const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }

  Scalar evaluate(const Scalar& x) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& s) const;

  // Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  bool operator==(const Polynomial& b) const { return field_ == b.field_ && c_ == b.c_; }
  bool operator!=(const Polynomial& b) const { return !(*this == b); }

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  Field field_;
  std::vector<Scalar> c_;
};

}  // namespace mconv
