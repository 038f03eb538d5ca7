#include <gtest/gtest.h>

#include <deque>
#include <functional>
#include <set>

#include "mconv/convolution.hpp"
#include "mconv/error.hpp"
#include "mconv/linalg.hpp"
#include "mconv/modgroup.hpp"
#include "support.hpp"

using namespace mconv;

namespace {

const Field Q = Field::rational();

std::vector<Matrix> V_mod(std::int64_t ell) {
  auto t = reduce_mod(test::printed_V(), ell);
  auto e = t.entries();
  e.pop_back();
  return e;
}

// Plain BFS over string keys with library-independent bookkeeping.
std::size_t closure_oracle(const std::vector<Matrix>& gens) {
  std::set<std::string> seen;
  std::deque<Matrix> todo;
  const Matrix id = Matrix::identity(gens[0].field(), gens[0].rows());
  seen.insert(id.to_string());
  todo.push_back(id);
  while (!todo.empty()) {
    const Matrix x = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Matrix y = x * g;
      if (seen.insert(y.to_string()).second) todo.push_back(std::move(y));
    }
  }
  return seen.size();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Reduction, Scalars) {
  EXPECT_EQ(reduce_mod(Scalar(Q, mpq_class(1, 2)), 5), Scalar(Field::finite(5), 3L));
  EXPECT_EQ(reduction_field(Q, 7), Field::finite(7));
  const Field K4 = Field::cyclotomic(4);
  EXPECT_EQ(reduction_of_generator(K4, 5), Scalar(Field::finite(5), 2L));
  EXPECT_EQ(reduction_field(K4, 7), Field::finite(7, 2));
  const Scalar z = reduction_of_generator(K4, 7);
  EXPECT_EQ(z.pow(2), Scalar(z.field(), -1L));
  EXPECT_FALSE(z.pow(1) == Scalar(z.field(), 1L) || z.pow(1) == Scalar(z.field(), -1L));
  EXPECT_EQ(kind_of([&] { reduction_field(Field::cyclotomic(5), 7); }), ErrorKind::NoRootInQuadratic);
  EXPECT_EQ(kind_of([&] { reduction_field(Field::cyclotomic(7), 7); }), ErrorKind::BadPrime);
  EXPECT_EQ(kind_of([&] { reduce_mod(Scalar(Q, mpq_class(1, 7)), 7); }), ErrorKind::BadPrime);
  EXPECT_EQ(kind_of([&] { reduce_mod(Scalar(Q, 1L), 9); }), ErrorKind::BadPrime);
}

TEST(Reduction, GeneratorIsPrimitiveRoot) {
  for (int n : {3, 4, 8, 12}) {
    for (std::int64_t ell : {5, 7, 11, 13, 37}) {
      if (ell % n == 0) continue;
      Scalar z;
      try {
        z = reduction_of_generator(Field::cyclotomic(n), ell);
      } catch (const Error&) {
        continue;
      }
      EXPECT_TRUE(z.pow(n).is_one()) << n << " " << ell;
      for (int k = 1; k < n; ++k) {
        if (n % k == 0) {
          EXPECT_FALSE(z.pow(k).is_one()) << n << " " << ell << " " << k;
        }
      }
    }
  }
}

TEST(ReductionProperty, Homomorphism) {
  auto g = test::rng(40);
  for (const auto& [f, ell] : {std::pair{Q, 5L}, std::pair{Field::cyclotomic(4), 7L},
                               std::pair{Field::cyclotomic(12), 13L}, std::pair{Field::cyclotomic(3), 11L}}) {
    for (int it = 0; it < 8; ++it) {
      const Matrix a = test::random_matrix(g, f, 3), b = test::random_matrix(g, f, 3);
      EXPECT_EQ(reduce_mod(a * b, ell), reduce_mod(a, ell) * reduce_mod(b, ell));
      EXPECT_EQ(reduce_mod(a + b, ell), reduce_mod(a, ell) + reduce_mod(b, ell));
    }
  }
}

TEST(Reduction, TupleKeepsProductRelation) {
  const auto t = reduce_mod(test::printed_V(), 11);
  EXPECT_EQ(t.field(), Field::finite(11));
  EXPECT_EQ(t.size(), 4u);
  EXPECT_FALSE(t.has_points());
  Matrix prod = Matrix::identity(t.field(), 3);
  for (const auto& e : t.entries()) prod = prod * e;
  EXPECT_TRUE(prod.is_identity());
}

TEST(Closure, KnownOrders) {
  EXPECT_EQ(group_closure(V_mod(5), 100000).order, 240u);
  EXPECT_EQ(group_closure(V_mod(11), 100000).order, 2640u);
  EXPECT_EQ(group_closure(V_mod(13), 100000).order, 4368u);
  EXPECT_EQ(group_closure({Matrix::identity(Field::finite(5), 3)}, 10).order, 1u);
  EXPECT_TRUE(group_closure(V_mod(13), 1000).exceeds_cap());
  EXPECT_THROW(group_elements(V_mod(13), 1000), Error);
}

TEST(Closure, MatchesOracle) {
  for (std::int64_t ell : {3, 5, 7, 11}) {
    const auto gens = V_mod(ell);
    const auto res = group_closure(gens, 100000);
    ASSERT_TRUE(res.order.has_value());
    EXPECT_EQ(*res.order, closure_oracle(gens)) << ell;
    EXPECT_EQ(group_elements(gens, 100000).size(), *res.order);
  }
  // A quadratic field: the 4x4 Kronecker square of an order-8 matrix pair.
  const Field F = Field::finite(7, 2);
  const Scalar t = Scalar::generator(F);
  const std::vector<Matrix> gens{Matrix::diagonal({t, t.inverse()}),
                                 Matrix::from_rows(F, {{Scalar(F), Scalar(F, 1L)}, {Scalar(F, -1L), Scalar(F)}}, 2)};
  EXPECT_EQ(*group_closure(gens, 100000).order, closure_oracle(gens));
}

TEST(ClosureProperty, OrderDividesGL) {
  auto g = test::rng(41);
  for (std::int64_t p : {3, 5}) {
    const Field f = Field::finite(p);
    for (int it = 0; it < 5; ++it) {
      const std::vector<Matrix> gens{test::random_invertible(g, f, 2), test::random_invertible(g, f, 2)};
      const auto res = group_closure(gens, 100000);
      ASSERT_TRUE(res.order.has_value());
      EXPECT_EQ(general_linear_order(2, p) % mpz_class(static_cast<unsigned long>(*res.order)), 0);
      EXPECT_EQ(*res.order, closure_oracle(gens));
    }
  }
  EXPECT_EQ(general_linear_order(3, 5), 1488000);
  EXPECT_EQ(general_linear_order(2, 49), mpz_class(49 * 49 - 1) * (49 * 49 - 49));
}

TEST(Closure, ElementOrder) {
  const Field f = Field::finite(7);
  EXPECT_EQ(element_order(Matrix::identity(f, 3), 10), 1u);
  EXPECT_EQ(element_order(Matrix::diagonal({Scalar(f, 3L)}), 100), 6u);
  EXPECT_EQ(element_order(Matrix::diagonal({Scalar(f, 3L)}), 5), 0u);
  EXPECT_EQ(element_order(jordan_block(Scalar::one(f), 2), 100), 7u);
}

TEST(O3, Recognition) {
  for (std::int64_t ell : {5, 11, 13}) {
    const auto gens = V_mod(ell);
    const auto rep = o3_recognition(gens, ell);
    EXPECT_TRUE(rep.absolutely_irreducible);
    ASSERT_TRUE(rep.order.has_value());
    EXPECT_EQ(*rep.order, static_cast<std::uint64_t>(2 * ell * (ell * ell - 1)));
    ASSERT_TRUE(rep.recognized.has_value());
    EXPECT_EQ(*rep.recognized, "O3(F_" + std::to_string(ell) + ")");
    ASSERT_TRUE(rep.invariant_gram.has_value());
    EXPECT_TRUE(is_invertible(*rep.invariant_gram));
  }
  EXPECT_EQ(*o3_recognition(V_mod(5), 5).invariant_gram,
            Matrix::from_ints(Field::finite(5), {{1, 2, 3}, {2, 2, 3}, {3, 3, 1}}));
}

TEST(O3, GramPreservedByWholeGroup) {
  for (std::int64_t ell : {5, 11}) {
    const auto gens = V_mod(ell);
    const Matrix G = *o3_recognition(gens, ell).invariant_gram;
    EXPECT_EQ(G, G.transpose());
    for (const auto& g : group_elements(gens, 100000)) ASSERT_EQ(g.transpose() * G * g, G);
  }
}

TEST(O3, TorusElement) {
  for (std::int64_t ell : {5, 11, 13}) {
    const auto gens = V_mod(ell);
    const auto o = static_cast<std::int64_t>(element_order(gens[0] * gens[1], 1000));
    EXPECT_EQ(o, ell + 1) << ell;
    EXPECT_EQ((ell + 1) % o, 0);
    EXPECT_NE((ell - 1) % o, 0);
  }
  // At 7 the same element has order 3, which divides ell - 1: no torus witness.
  const auto g7 = V_mod(7);
  EXPECT_EQ(element_order(g7[0] * g7[1], 1000), 3u);
  const auto rep = o3_recognition(g7, 7);
  EXPECT_EQ(rep.order, 336u);
  EXPECT_FALSE(rep.recognized.has_value());
}

TEST(O3, CharacteristicThreeObservation) {
  const auto rep = o3_recognition(V_mod(3), 3);
  EXPECT_EQ(rep.order, 48u);
  EXPECT_EQ(rep.recognized, std::optional<std::string>("O3(F_3)"));
  const auto pr = primitivity_bound(reduce_mod(test::printed_V(), 3));
  EXPECT_EQ(pr.x, 1u);
  EXPECT_EQ(pr.bound, std::optional<std::size_t>(1));
  EXPECT_FALSE(pr.primitive);
}

TEST(O3, Errors) {
  EXPECT_EQ(kind_of([] { o3_recognition(V_mod(5), 4); }), ErrorKind::BadPrime);
  const Field f2 = Field::finite(2);
  EXPECT_THROW(o3_recognition({Matrix::identity(f2, 3)}, 2), Error);
  EXPECT_THROW(o3_recognition({Matrix::identity(Field::finite(5), 2)}, 5), Error);
  // A group preserving no non-degenerate symmetric form.
  const Field f5 = Field::finite(5);
  const Matrix d = Matrix::diagonal({Scalar(f5, 2L), Scalar(f5, 1L), Scalar(f5, 1L)});
  EXPECT_EQ(kind_of([&] { o3_recognition({d, jordan_block(Scalar::one(f5), 3)}, 5); }),
            ErrorKind::NoInvariantForm);
}

TEST(Primitivity, Examples) {
  const auto v = primitivity_bound(reduce_mod(test::printed_V(), 11));
  EXPECT_EQ(v.n, 3u);
  EXPECT_EQ(v.m, 6u);
  EXPECT_EQ(v.x, 3u);
  EXPECT_EQ(v.bound, std::optional<std::size_t>(3));
  EXPECT_TRUE(v.primitive);

  const auto demo = sl_demo(3, 4);
  for (std::int64_t ell : {13, 37, 61}) {
    const auto t = reduce_mod(demo.result, ell);
    EXPECT_TRUE(group_absolutely_irreducible(t.entries()));
    const auto pr = primitivity_bound(t);
    EXPECT_EQ(pr.n, 9u);
    EXPECT_EQ(pr.m, 22u);
    EXPECT_EQ(pr.x, 2u);
    EXPECT_EQ(pr.b, 9u);
    EXPECT_EQ(pr.bound, std::optional<std::size_t>(8));
    EXPECT_TRUE(pr.primitive);
  }
}

TEST(Primitivity, NeedsAbsoluteIrreducibility) {
  const Field f = Field::finite(7);
  const Matrix a = Matrix::diagonal({Scalar(f, 2L), Scalar(f, 3L)});
  const auto t = MonodromyTuple::from_finite({a, a});
  EXPECT_EQ(kind_of([&] { primitivity_bound(t); }), ErrorKind::PreconditionViolation);
  EXPECT_FALSE(group_absolutely_irreducible(t.entries()));
}
