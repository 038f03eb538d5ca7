#include "mconv/polynomial.hpp"

#include "mconv/error.hpp"

namespace mconv {

Polynomial::Polynomial(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw Error(ErrorKind::FieldMismatch, "polynomial coefficient field");
  normalize();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::variable(Field f) { return Polynomial(f, {Scalar::zero(f), Scalar::one(f)}); }

Polynomial Polynomial::linear_factor(const Scalar& root) {
  return Polynomial(root.field(), {-root, Scalar::one(root.field())});
}

Polynomial Polynomial::from_ints(Field f, const std::vector<long>& coeffs) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(f, v);
  return Polynomial(f, std::move(c));
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  if (field_ != b.field_) throw Error(ErrorKind::FieldMismatch, "polynomial fields differ");
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) { return *this += -b; }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  Polynomial r(*this);
  for (auto& c : r.c_) c *= s;
  r.normalize();
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw Error(ErrorKind::FieldMismatch, "polynomial fields differ");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(a.field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (d.field_ != field_) throw Error(ErrorKind::FieldMismatch, "polynomial fields differ");
  std::vector<Scalar> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {Polynomial(field_), *this};
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd + 1), Scalar::zero(field_));
  Scalar lead_inv = d.leading().inverse();
  for (int i = degree(); i >= dd; --i) {
    Scalar c = rem[static_cast<std::size_t>(i)] * lead_inv;
    quot[static_cast<std::size_t>(i - dd)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= c * d.c_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string c = c_[i].to_string();
    bool compound = c.find_first_of("+-", 1) != std::string::npos;
    if (compound) c = "(" + c + ")";
    std::string mono = i == 0 ? "" : (i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i));
    std::string term;
    if (i == 0)
      term = c;
    else if (c == "1")
      term = mono;
    else if (c == "-1")
      term = "-" + mono;
    else
      term = c + "*" + mono;
    if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

}  // namespace mconv
