#include "mconv/scalar.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "mconv/error.hpp"
#include "mconv/numtheory.hpp"

namespace mconv {

namespace detail {
struct FieldData {
  FieldKind kind;
  int n = 1;
  std::int64_t p = 0;
  int k = 1;
  std::int64_t c0 = 0, c1 = 0;
  int degree = 1;
  std::vector<mpz_class> phi;
  std::string name;
};
}  // namespace detail

namespace {

using detail::FieldData;
using Key = std::tuple<int, int, std::int64_t, std::int64_t, std::int64_t, int>;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<Key, std::unique_ptr<FieldData>>& registry() {
  static std::map<Key, std::unique_ptr<FieldData>> r;
  return r;
}

// Integer polynomial helpers for Phi_n (low-to-high coefficients).
std::vector<mpz_class> exact_divide(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  long dn = static_cast<long>(den.size());
  long top = static_cast<long>(num.size()) - 1;
  std::vector<mpz_class> quot(static_cast<std::size_t>(top - dn + 2));
  for (long i = top; i >= dn - 1; --i) {
    mpz_class c = num[static_cast<std::size_t>(i)] / den.back();
    quot[static_cast<std::size_t>(i - dn + 1)] = c;
    for (long j = 0; j < dn; ++j)
      num[static_cast<std::size_t>(i - dn + 1 + j)] -= c * den[static_cast<std::size_t>(j)];
  }
  return quot;
}

std::vector<mpz_class> compute_cyclotomic(int n) {
  static std::mutex m;
  static std::map<int, std::vector<mpz_class>> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) poly = exact_divide(poly, compute_cyclotomic(d));
  std::lock_guard<std::mutex> lock(m);
  cache.emplace(n, poly);
  return poly;
}

const FieldData* intern(Key key, const std::function<void(FieldData&)>& init) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(key);
  if (it != reg.end()) return it->second.get();
  auto data = std::make_unique<FieldData>();
  init(*data);
  const FieldData* ptr = data.get();
  reg.emplace(key, std::move(data));
  return ptr;
}

std::int64_t normp(std::int64_t a, std::int64_t p) { return mod_normalize(a, p); }

}  // namespace

Field Field::rational() {
  static const FieldData* d = intern(Key{0, 1, 0, 0, 0, 1}, [](FieldData& f) {
    f.kind = FieldKind::Rational;
    f.name = "rational";
  });
  return Field(d);
}

Field Field::cyclotomic(int n) {
  if (n < 1) throw Error(ErrorKind::PreconditionViolation, "cyclotomic order must be >= 1");
  return Field(intern(Key{1, n, 0, 0, 0, 1}, [n](FieldData& f) {
    f.kind = FieldKind::Cyclotomic;
    f.n = n;
    f.phi = compute_cyclotomic(n);
    f.degree = static_cast<int>(f.phi.size()) - 1;
    f.name = "cyclotomic:" + std::to_string(n);
  }));
}

Field Field::finite(std::int64_t p, int k) {
  if (!is_prime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 40)) throw Error(ErrorKind::BadPrime, "prime too large");
  if (k == 1) {
    return Field(intern(Key{2, 1, p, 0, 0, 1}, [p](FieldData& f) {
      f.kind = FieldKind::Finite;
      f.p = p;
      f.k = 1;
      f.degree = 1;
      f.name = "finite:" + std::to_string(p);
    }));
  }
  if (k != 2) throw Error(ErrorKind::PreconditionViolation, "finite field degree must be 1 or 2");
  std::int64_t a = p == 2 ? 1 : least_nonresidue(p);
  if (p == 2) return finite_quadratic(2, 1, 1);  // t^2 + t + 1
  return finite_quadratic(p, normp(-a, p), 0);
}

Field Field::finite_quadratic(std::int64_t p, std::int64_t c0, std::int64_t c1) {
  if (!is_prime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not prime");
  c0 = normp(c0, p);
  c1 = normp(c1, p);
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = (mul_mod(x, x, p) + mul_mod(c1, x, p) + c0) % p;
    if (v == 0)
      throw Error(ErrorKind::PreconditionViolation, "defining polynomial is reducible over F_p");
  }
  bool is_default;
  if (p == 2) {
    is_default = (c0 == 1 && c1 == 1);
  } else {
    is_default = (c1 == 0 && c0 == normp(-least_nonresidue(p), p));
  }
  return Field(intern(Key{2, 2, p, c0, c1, 2}, [=](FieldData& f) {
    f.kind = FieldKind::Finite;
    f.p = p;
    f.k = 2;
    f.c0 = c0;
    f.c1 = c1;
    f.degree = 2;
    f.name = "finite:" + std::to_string(p) + ",2";
    if (!is_default) f.name += ",poly=" + std::to_string(c0) + "," + std::to_string(c1);
  }));
}

Field Field::parse(std::string_view text) {
  auto fail = [&](std::size_t pos, const std::string& msg) -> Field {
    throw ParseError(pos, "bad field descriptor '" + std::string(text) + "': " + msg);
  };
  auto parse_int = [&](std::string_view s, std::size_t offset) -> std::int64_t {
    if (s.empty() || s.size() > 15) fail(offset, "expected a positive integer");
    std::int64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail(offset + i, "expected a digit");
      v = v * 10 + (s[i] - '0');
    }
    return v;
  };
  if (text == "rational") return rational();
  constexpr std::string_view cyc = "cyclotomic:";
  constexpr std::string_view fin = "finite:";
  if (text.substr(0, cyc.size()) == cyc) {
    std::int64_t n = parse_int(text.substr(cyc.size()), cyc.size());
    if (n < 1 || n > 100000) fail(cyc.size(), "cyclotomic order out of range");
    return cyclotomic(static_cast<int>(n));
  }
  if (text.substr(0, fin.size()) == fin) {
    std::string_view rest = text.substr(fin.size());
    std::size_t comma = rest.find(',');
    std::int64_t p = parse_int(rest.substr(0, comma), fin.size());
    int k = 1;
    if (comma != std::string_view::npos)
      k = static_cast<int>(parse_int(rest.substr(comma + 1), fin.size() + comma + 1));
    if (k != 1 && k != 2) fail(fin.size() + comma + 1, "degree must be 1 or 2");
    return finite(p, k);
  }
  return fail(0, "expected rational, cyclotomic:<n> or finite:<p>[,<k>]");
}

FieldKind Field::kind() const { return d_->kind; }
int Field::conductor() const { return d_->n; }
int Field::degree() const { return d_->degree; }
std::int64_t Field::characteristic() const { return d_->p; }
std::int64_t Field::size() const {
  if (d_->kind != FieldKind::Finite) return 0;
  return d_->k == 1 ? d_->p : d_->p * d_->p;
}
std::int64_t Field::quad_c0() const { return d_->c0; }
std::int64_t Field::quad_c1() const { return d_->c1; }
const std::vector<mpz_class>& Field::cyclotomic_poly() const { return d_->phi; }
std::string Field::to_string() const { return d_->name; }

// ---------------------------------------------------------------------------

Scalar::Scalar(Field f) : field_(f) {
  if (!f.is_finite()) q_.assign(static_cast<std::size_t>(f.degree()), mpq_class(0));
}

Scalar::Scalar(Field f, long value) : Scalar(f) {
  if (f.is_finite())
    f_[0] = normp(value, f.characteristic());
  else
    q_[0] = value;
}

Scalar::Scalar(Field f, const mpq_class& value) : Scalar(f) {
  if (f.is_finite()) {
    std::int64_t p = f.characteristic();
    mpz_class num = value.get_num() % p, den = value.get_den() % p;
    if (den == 0) throw Error(ErrorKind::BadPrime, "denominator divisible by " + std::to_string(p));
    f_[0] = mul_mod(normp(num.get_si(), p), inv_mod(den.get_si(), p), p);
  } else {
    q_[0] = value;
  }
}

Scalar Scalar::generator(Field f) {
  Scalar s(f);
  if (f.is_cyclotomic()) {
    std::vector<mpq_class> c(2);
    c[0] = 0;
    c[1] = 1;
    return from_rational_coeffs(f, std::move(c));
  }
  if (f.is_finite() && f.degree() == 2) {
    s.f_[1] = 1;
    return s;
  }
  throw Error(ErrorKind::FieldMismatch, "field " + f.to_string() + " has no generator symbol");
}

Scalar Scalar::from_rational_coeffs(Field f, std::vector<mpq_class> coeffs) {
  if (f.is_finite()) throw Error(ErrorKind::FieldMismatch, "rational coefficients for a finite field");
  Scalar s(f);
  for (auto& c : coeffs) c.canonicalize();
  if (f.is_cyclotomic()) {
    s.reduce_cyclotomic(coeffs);
  } else {
    for (std::size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) throw Error(ErrorKind::FieldMismatch, "non-constant coefficients in Q");
    coeffs.resize(1);
  }
  coeffs.resize(static_cast<std::size_t>(f.degree()), mpq_class(0));
  s.q_ = std::move(coeffs);
  return s;
}

Scalar Scalar::from_finite_coeffs(Field f, std::int64_t c0, std::int64_t c1) {
  if (!f.is_finite()) throw Error(ErrorKind::FieldMismatch, "finite coefficients for a non-finite field");
  Scalar s(f);
  std::int64_t p = f.characteristic();
  s.f_[0] = normp(c0, p);
  if (f.degree() == 2)
    s.f_[1] = normp(c1, p);
  else if (normp(c1, p) != 0)
    throw Error(ErrorKind::FieldMismatch, "t is not an element of F_p");
  return s;
}

void Scalar::reduce_cyclotomic(std::vector<mpq_class>& poly) const {
  const auto& phi = field_.cyclotomic_poly();
  std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k] == 0) continue;
    mpq_class c = poly[k];
    for (std::size_t j = 0; j <= deg; ++j) poly[k - deg + j] -= c * phi[j];
  }
  if (poly.size() > deg) poly.resize(deg);
}

bool Scalar::is_zero() const {
  if (field_.is_finite()) return f_[0] == 0 && f_[1] == 0;
  for (const auto& c : q_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (field_.is_finite()) return f_[0] == 1 && f_[1] == 0;
  if (q_[0] != 1) return false;
  for (std::size_t i = 1; i < q_.size(); ++i)
    if (q_[i] != 0) return false;
  return true;
}

bool Scalar::is_prime_field_element() const {
  if (field_.is_finite()) return f_[1] == 0;
  for (std::size_t i = 1; i < q_.size(); ++i)
    if (q_[i] != 0) return false;
  return true;
}

mpq_class Scalar::to_rational() const {
  if (field_.is_finite() || !is_prime_field_element())
    throw Error(ErrorKind::FieldMismatch, "value " + to_string() + " is not rational");
  return q_[0];
}

void Scalar::check_same(const Scalar& b) const {
  if (field_ != b.field_)
    throw Error(ErrorKind::FieldMismatch,
                "operands in " + field_.to_string() + " and " + b.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_finite()) {
    std::int64_t p = field_.characteristic();
    r.f_[0] = normp(-f_[0], p);
    r.f_[1] = normp(-f_[1], p);
  } else {
    for (auto& c : r.q_) c = -c;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  check_same(b);
  if (field_.is_finite()) {
    std::int64_t p = field_.characteristic();
    f_[0] = (f_[0] + b.f_[0]) % p;
    f_[1] = (f_[1] + b.f_[1]) % p;
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) q_[i] += b.q_[i];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  check_same(b);
  if (field_.is_finite()) {
    std::int64_t p = field_.characteristic();
    f_[0] = normp(f_[0] - b.f_[0], p);
    f_[1] = normp(f_[1] - b.f_[1], p);
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) q_[i] -= b.q_[i];
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  check_same(b);
  switch (field_.kind()) {
    case FieldKind::Rational:
      q_[0] *= b.q_[0];
      break;
    case FieldKind::Finite: {
      std::int64_t p = field_.characteristic();
      if (field_.degree() == 1) {
        f_[0] = mul_mod(f_[0], b.f_[0], p);
      } else {
        std::int64_t hi = mul_mod(f_[1], b.f_[1], p);
        std::int64_t r0 = normp(mul_mod(f_[0], b.f_[0], p) - mul_mod(field_.quad_c0(), hi, p), p);
        std::int64_t r1 = normp(mul_mod(f_[0], b.f_[1], p) + mul_mod(f_[1], b.f_[0], p) -
                                    mul_mod(field_.quad_c1(), hi, p),
                                p);
        f_[0] = r0;
        f_[1] = r1;
      }
      break;
    }
    case FieldKind::Cyclotomic: {
      std::size_t n = q_.size();
      std::vector<mpq_class> prod(2 * n - 1, mpq_class(0));
      for (std::size_t i = 0; i < n; ++i) {
        if (q_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (b.q_[j] != 0) prod[i + j] += q_[i] * b.q_[j];
      }
      reduce_cyclotomic(prod);
      q_ = std::move(prod);
      break;
    }
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  switch (field_.kind()) {
    case FieldKind::Rational: {
      Scalar r(field_);
      r.q_[0] = 1 / q_[0];
      return r;
    }
    case FieldKind::Finite: {
      std::int64_t p = field_.characteristic();
      if (field_.degree() == 1) return from_finite_coeffs(field_, inv_mod(f_[0], p));
      // x * conj(x) = N(x) with conj(t) = -c1 - t.
      std::int64_t a0 = f_[0], a1 = f_[1];
      std::int64_t conj0 = normp(a0 - mul_mod(a1, field_.quad_c1(), p), p);
      std::int64_t conj1 = normp(-a1, p);
      Scalar conj = from_finite_coeffs(field_, conj0, conj1);
      Scalar norm = *this * conj;  // lies in F_p
      std::int64_t ninv = inv_mod(norm.f_[0], p);
      return from_finite_coeffs(field_, mul_mod(conj0, ninv, p), mul_mod(conj1, ninv, p));
    }
    case FieldKind::Cyclotomic: {
      // Solve x * y = 1 as a linear system over Q in the power basis.
      std::size_t n = q_.size();
      std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1, mpq_class(0)));
      Scalar col = *this;
      Scalar z = generator(field_);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) a[i][j] = col.q_[i];
        col *= z;
      }
      a[0][n] = 1;
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (a[piv][c] == 0) ++piv;
        std::swap(a[piv], a[c]);
        mpq_class inv = 1 / a[c][c];
        for (std::size_t k = c; k <= n; ++k) a[c][k] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == c || a[r][c] == 0) continue;
          mpq_class f = a[r][c];
          for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
      }
      Scalar r(field_);
      for (std::size_t i = 0; i < n; ++i) r.q_[i] = a[i][n];
      return r;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  check_same(b);
  return *this *= b.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = one(field_), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& b) const {
  if (field_ != b.field_) return false;
  if (field_.is_finite()) return f_ == b.f_;
  return q_ == b.q_;
}

bool Scalar::canonical_less(const Scalar& b) const {
  if (field_ != b.field_) return field_.to_string() < b.field_.to_string();
  if (field_.is_finite()) return f_ < b.f_;
  for (std::size_t i = 0; i < q_.size(); ++i) {
    int c = cmp(q_[i], b.q_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_[0].get_str();
  if (is_zero()) return "0";
  std::string out;
  auto append_term = [&](std::string coeff, std::size_t e, char var) {
    std::string term;
    if (e == 0) {
      term = coeff;
    } else {
      std::string mono(1, var);
      if (e > 1) mono += "^" + std::to_string(e);
      if (coeff == "1")
        term = mono;
      else if (coeff == "-1")
        term = "-" + mono;
      else
        term = coeff + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  };
  if (field_.is_finite()) {
    for (int e = 0; e < field_.degree(); ++e)
      if (f_[static_cast<std::size_t>(e)] != 0)
        append_term(std::to_string(f_[static_cast<std::size_t>(e)]), static_cast<std::size_t>(e), 't');
  } else {
    for (std::size_t e = 0; e < q_.size(); ++e)
      if (q_[e] != 0) append_term(q_[e].get_str(), e, 'z');
  }
  return out;
}

std::size_t Scalar::hash() const {
  std::size_t h = std::hash<const void*>()(field_.data());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (field_.is_finite()) {
    mix(static_cast<std::size_t>(f_[0]));
    mix(static_cast<std::size_t>(f_[1]));
  } else {
    for (const auto& c : q_) {
      mix(static_cast<std::size_t>(mpz_get_ui(c.get_num_mpz_t())) * (sgn(c) < 0 ? 3 : 1));
      mix(static_cast<std::size_t>(mpz_get_ui(c.get_den_mpz_t())));
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  Scalar parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty scalar");
    if (field_.is_rational()) return parse_rational_only();
    Scalar total(field_);
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) {
        if (first) throw ParseError(pos_, "empty scalar");
        break;
      }
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      Scalar term = parse_term();
      total += negative ? -term : term;
      first = false;
    }
    return total;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  char variable() const { return field_.is_cyclotomic() ? 'z' : 't'; }
  bool is_var_char(char c) const { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

  void reject_symbol() const {
    throw Error(ErrorKind::FieldMismatch, "symbol '" + std::string(1, peek()) + "' at position " +
                                              std::to_string(pos_) + " is not in field " +
                                              field_.to_string());
  }

  mpz_class parse_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  mpq_class parse_coefficient() {
    mpz_class num = parse_digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      if (field_.is_finite()) throw ParseError(pos_, "finite-field coefficients are integers");
      ++pos_;
      std::size_t den_pos = pos_;
      mpz_class den = parse_digits();
      if (den == 0) throw ParseError(den_pos, "zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  Scalar parse_rational_only() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    skip_ws();
    if (!at_end() && is_var_char(peek())) reject_symbol();
    mpq_class q = parse_coefficient();
    skip_ws();
    if (!at_end()) {
      if (is_var_char(peek()) || peek() == '*') {
        std::size_t p = pos_;
        while (p < text_.size() && !is_var_char(text_[p])) ++p;
        if (p < text_.size()) {
          pos_ = p;
          reject_symbol();
        }
      }
      throw ParseError(pos_, "unexpected trailing input");
    }
    return Scalar(field_, negative ? mpq_class(-q) : q);
  }

  // Exponent of the variable after it has been consumed.
  long parse_exponent() {
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      mpz_class e = parse_digits();
      if (!e.fits_slong_p()) throw ParseError(pos_, "exponent too large");
      return e.get_si();
    }
    return 1;
  }

  Scalar power_of_generator(long e) {
    if (field_.is_cyclotomic()) {
      long n = field_.conductor();
      e %= n;
      std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, mpq_class(0));
      c[static_cast<std::size_t>(e)] = 1;
      return Scalar::from_rational_coeffs(field_, std::move(c));
    }
    return Scalar::generator(field_).pow(e);
  }

  Scalar parse_variable() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "expected a term");
    if (!is_var_char(peek())) throw ParseError(pos_, "expected a variable");
    if (peek() != variable() || (field_.is_finite() && field_.degree() == 1)) reject_symbol();
    ++pos_;
    return power_of_generator(parse_exponent());
  }

  Scalar parse_term() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "expected a term");
    if (is_var_char(peek())) return parse_variable();
    mpq_class c = parse_coefficient();
    Scalar coeff = field_.is_finite() ? Scalar(field_, c) : Scalar::from_rational_coeffs(field_, {c});
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      return coeff * parse_variable();
    }
    if (!at_end() && is_var_char(peek())) reject_symbol();
    return coeff;
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Field& field) {
  return ScalarParser(text, field).parse();
}

bool embeds_into(const Field& from, const Field& to) {
  if (from == to) return true;
  if (from.is_rational()) return true;
  if (from.is_cyclotomic() && to.is_cyclotomic()) return to.conductor() % from.conductor() == 0;
  if (from.is_finite() && to.is_finite())
    return from.characteristic() == to.characteristic() && from.degree() == 1;
  return false;
}

Scalar embed(const Scalar& s, const Field& target) {
  const Field& src = s.field();
  if (src == target) return s;
  if (!embeds_into(src, target))
    throw Error(ErrorKind::FieldMismatch,
                "no coercion from " + src.to_string() + " to " + target.to_string());
  if (src.is_rational()) return Scalar(target, s.rational_coeffs()[0]);
  if (src.is_finite()) return Scalar::from_finite_coeffs(target, s.finite_coeff(0));
  // Q(zeta_m) -> Q(zeta_n): zeta_m -> zeta_n^(n/m).
  std::size_t step = static_cast<std::size_t>(target.conductor() / src.conductor());
  const auto& c = s.rational_coeffs();
  std::vector<mpq_class> out(c.size() * step + 1, mpq_class(0));
  for (std::size_t e = 0; e < c.size(); ++e) out[e * step] = c[e];
  return Scalar::from_rational_coeffs(target, std::move(out));
}

long root_of_unity_order(const Scalar& s, long bound) {
  if (s.is_zero()) return 0;
  Scalar x = s;
  for (long n = 1; n <= bound; ++n) {
    if (x.is_one()) return n;
    x *= s;
  }
  return 0;
}

}  // namespace mconv
