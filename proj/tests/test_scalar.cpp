#include <gtest/gtest.h>

#include "mconv/error.hpp"
#include "mconv/numtheory.hpp"
#include "mconv/scalar.hpp"
#include "support.hpp"

using namespace mconv;

namespace {

std::vector<Field> sample_fields() {
  return {Field::rational(), Field::cyclotomic(4), Field::cyclotomic(12), Field::cyclotomic(9),
          Field::finite(7), Field::finite(5, 2), Field::finite(7, 2)};
}

}  // namespace

TEST(Scalar, RationalSum) {
  const Field Q = Field::rational();
  EXPECT_EQ(parse_scalar("1/2", Q) + parse_scalar("1/3", Q), parse_scalar("5/6", Q));
  EXPECT_EQ((parse_scalar("1/2", Q) + parse_scalar("1/3", Q)).to_string(), "5/6");
}

TEST(Scalar, CyclotomicRelation) {
  const Field K = Field::cyclotomic(4);
  const Scalar z = Scalar::generator(K);
  EXPECT_EQ(z * z, Scalar(K, -1L));
}

TEST(Scalar, QuadraticFiniteRelation) {
  const Field F = Field::finite(5, 2);
  const Scalar t = Scalar::generator(F);
  // default modulus t^2 - 2 (2 is the least non-residue mod 5)
  EXPECT_EQ(t * t, Scalar(F, 2L));
  EXPECT_EQ(F.quad_c0(), 5 - 2);
  EXPECT_EQ(F.quad_c1(), 0);
}

TEST(Scalar, ParseExamples) {
  const Field Q = Field::rational();
  EXPECT_EQ(parse_scalar("-3/7", Q).to_rational(), mpq_class(-3, 7));
  const Field K8 = Field::cyclotomic(8);
  const Scalar z = Scalar::generator(K8);
  EXPECT_EQ(parse_scalar("1/2*z^3-2", K8), Scalar(K8, mpq_class(1, 2)) * z.pow(3) - Scalar(K8, 2L));
  EXPECT_TRUE(parse_scalar("z^4", Field::cyclotomic(4)).is_one());
  EXPECT_EQ(parse_scalar(" - z + 3 ", K8), Scalar(K8, 3L) - z);
  const Field F = Field::finite(5, 2);
  EXPECT_EQ(parse_scalar("3+2*t", F), Scalar(F, 3L) + Scalar(F, 2L) * Scalar::generator(F));
  EXPECT_EQ(parse_scalar("12", Field::finite(7)), Scalar(Field::finite(7), 5L));
}

TEST(Scalar, ParseErrors) {
  const Field Q = Field::rational();
  EXPECT_THROW(parse_scalar("z", Q), Error);
  try {
    parse_scalar("z", Q);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
  EXPECT_THROW(parse_scalar("1/", Q), ParseError);
  EXPECT_THROW(parse_scalar("1/0", Q), Error);
  EXPECT_THROW(parse_scalar("2**z", Field::cyclotomic(3)), ParseError);
  EXPECT_THROW(parse_scalar("t", Field::finite(7)), Error);
}

TEST(Scalar, FieldErrors) {
  const Scalar a(Field::rational(), 1L);
  const Scalar b(Field::cyclotomic(3), 1L);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
  try {
    (void)(a / Scalar::zero(Field::rational()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  EXPECT_THROW(Field::finite(6), Error);
  EXPECT_THROW(Field::finite_quadratic(5, -4, 0), Error);  // t^2 - 4 splits
  EXPECT_EQ(Field::finite_quadratic(5, -2, 0), Field::finite(5, 2));
  const Field other = Field::finite_quadratic(5, 1, 1);  // t^2 + t + 1, irreducible mod 5
  const Scalar t = Scalar::generator(other);
  EXPECT_EQ(t * t, -t - Scalar::one(other));
}

TEST(Scalar, FieldParse) {
  EXPECT_EQ(Field::parse("rational"), Field::rational());
  EXPECT_EQ(Field::parse("cyclotomic:12"), Field::cyclotomic(12));
  EXPECT_EQ(Field::parse("finite:7"), Field::finite(7));
  EXPECT_EQ(Field::parse("finite:7,2"), Field::finite(7, 2));
  EXPECT_THROW(Field::parse("complex"), Error);
  EXPECT_EQ(Field::cyclotomic(12).degree(), 4);
  EXPECT_EQ(Field::finite(7, 2).size(), 49);
}

TEST(ScalarProperty, FieldAxioms) {
  auto g = test::rng(1);
  for (const auto& f : sample_fields()) {
    for (int it = 0; it < 40; ++it) {
      const Scalar a = test::random_scalar(g, f), b = test::random_scalar(g, f), c = test::random_scalar(g, f);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one()) << f.to_string() << " " << a.to_string();
      }
    }
  }
}

TEST(ScalarProperty, CyclotomicGenerator) {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 24}) {
    const Field K = Field::cyclotomic(n);
    const Scalar z = Scalar::generator(K);
    EXPECT_TRUE(z.pow(n).is_one()) << n;
    EXPECT_EQ(K.degree(), euler_phi(n));
    // Phi_n(z) = 0 evaluated from the integer coefficients
    Scalar acc = Scalar::zero(K);
    const auto& phi = K.cyclotomic_poly();
    for (auto it = phi.rbegin(); it != phi.rend(); ++it) acc = acc * z + Scalar(K, mpq_class(*it));
    EXPECT_TRUE(acc.is_zero()) << n;
    EXPECT_EQ(root_of_unity_order(z, 100), n);
  }
}

TEST(ScalarProperty, Frobenius) {
  auto g = test::rng(2);
  for (const auto& f : {Field::finite(7), Field::finite(5, 2), Field::finite(11, 2), Field::finite(3, 2)}) {
    const long p = f.characteristic();
    for (int it = 0; it < 30; ++it) {
      const Scalar a = test::random_scalar(g, f), b = test::random_scalar(g, f);
      EXPECT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
      EXPECT_EQ((a * b).pow(p), a.pow(p) * b.pow(p));
      EXPECT_EQ(a.pow(f.size()), a);
    }
  }
}

TEST(ScalarProperty, ParseFormatRoundTrip) {
  auto g = test::rng(3);
  for (const auto& f : sample_fields()) {
    for (int it = 0; it < 40; ++it) {
      Scalar a = test::random_scalar(g, f, -9, 9);
      if (!f.is_finite() && it % 3 == 0) a = a / Scalar(f, static_cast<long>(it + 2));
      const std::string text = format_scalar(a);
      EXPECT_EQ(parse_scalar(text, f), a) << text;
      EXPECT_EQ(format_scalar(parse_scalar(text, f)), text);
    }
  }
}

TEST(Scalar, Embedding) {
  const Field K4 = Field::cyclotomic(4), K12 = Field::cyclotomic(12);
  const Scalar i = Scalar::generator(K4);
  const Scalar ie = embed(i, K12);
  EXPECT_EQ(ie, Scalar::generator(K12).pow(3));
  EXPECT_EQ(embed(i * i, K12), ie * ie);
  EXPECT_TRUE(embeds_into(Field::rational(), K12));
  EXPECT_FALSE(embeds_into(Field::cyclotomic(5), K12));
  EXPECT_THROW(embed(Scalar::generator(Field::cyclotomic(5)), K12), Error);
}

TEST(NumberTheory, Legendre) {
  EXPECT_EQ(legendre(-1, 5), 1);
  EXPECT_EQ(legendre(-1, 7), -1);
  EXPECT_EQ(legendre(3, 11), 1);
  EXPECT_EQ(legendre(22, 11), 0);
  EXPECT_EQ(least_nonresidue(5), 2);
  EXPECT_EQ(least_nonresidue(7), 3);
}

TEST(NumberTheoryProperty, LegendreMultiplicative) {
  auto g = test::rng(4);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (long p : {5L, 7L, 11L, 13L, 29L, 101L}) {
    for (int it = 0; it < 50; ++it) {
      const long a = d(g), b = d(g);
      EXPECT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
      // Oracle: brute-force square test.
      const long am = ((a % p) + p) % p;
      int expect = am == 0 ? 0 : -1;
      for (long x = 1; x < p; ++x)
        if (x * x % p == am) expect = 1;
      EXPECT_EQ(legendre(a, p), expect);
    }
  }
}
