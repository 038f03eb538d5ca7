#include <gtest/gtest.h>

#include "mconv/braid.hpp"
#include "mconv/cohomology.hpp"
#include "mconv/error.hpp"
#include "mconv/linalg.hpp"
#include "support.hpp"

using namespace mconv;

namespace {

const Field Q = Field::rational();

// Test-side Phi(T, beta_i), assembled block by block from the defining
// formula, composed by the cocycle rule.
Matrix phi_single(const MonodromyTuple& t, int i) {
  const std::size_t d = t.dim(), n = t.size();
  const std::size_t a = static_cast<std::size_t>(i - 1), b = a + 1;
  Matrix m = Matrix::identity(t.field(), n * d);
  const Matrix I = Matrix::identity(t.field(), d);
  m.set_block(a * d, a * d, Matrix(t.field(), d, d));
  m.set_block(b * d, b * d, I - inverse(t[b]) * t[a] * t[b]);
  m.set_block(b * d, a * d, I);
  m.set_block(a * d, b * d, t[b]);
  return m;
}

Matrix phi_oracle(MonodromyTuple t, const BraidWord& w) {
  Matrix out = Matrix::identity(t.field(), t.size() * t.dim());
  for (const auto& l : w.letters()) {
    const BraidWord one(w.r(), {l});
    const MonodromyTuple next = braid_act(t, one);
    out = out * (l.exponent == 1 ? phi_single(t, l.index) : inverse(phi_single(next, l.index)));
    t = next;
  }
  return out;
}

struct Dims {
  std::size_t h, e, u;
};

// Dimensions by rank counting only, independent of the Subspace machinery.
Dims dims_oracle(const MonodromyTuple& t) {
  const Field f = t.field();
  const std::size_t d = t.dim(), n = t.size();
  const Matrix I = Matrix::identity(f, d);
  Matrix stacked(f, n * d, d);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix p = I;
    for (std::size_t m = k + 1; m < n; ++m) p = p * t[m];
    stacked.set_block(k * d, 0, p);
  }
  Matrix e(f, d, n * d);
  for (std::size_t k = 0; k < n; ++k) e.set_block(0, k * d, t[k] - I);
  // K = product of the images; U = {x in K : x * stacked = 0}.
  std::vector<RowVector> kb;
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix img = t[k] - I;
    const Echelon ech = rref(img);
    for (std::size_t row = 0; row < ech.pivots.size(); ++row) {
      RowVector v = zero_vector(f, n * d);
      for (std::size_t c = 0; c < d; ++c) v[k * d + c] = ech.reduced(row, c);
      kb.push_back(v);
    }
  }
  std::size_t u = 0;
  if (!kb.empty()) {
    const Matrix km = Matrix::from_rows(f, kb, n * d);
    u = kb.size() - rank(km * stacked);
  }
  return {n * d - rank(stacked), rank(e), u};
}

std::vector<Field> fields() { return {Q, Field::finite(7)}; }

}  // namespace

TEST(Tuple, Validation) {
  const Matrix a = Matrix::from_ints(Q, {{-1}});
  EXPECT_NO_THROW(MonodromyTuple({a, a, Matrix::from_ints(Q, {{1}})}));
  try {
    MonodromyTuple({a, a, a});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ProductRelation);
  }
  try {
    MonodromyTuple({a, a, Matrix::from_ints(Q, {{1}})}, Points{1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPoints);
  }
  EXPECT_THROW(MonodromyTuple({a, a, Matrix::from_ints(Q, {{1}})}, Points{1}), Error);
  EXPECT_THROW(MonodromyTuple({Matrix(Q, 1, 1), a}), Error);
  const auto t = MonodromyTuple::from_finite({a, a, a});
  EXPECT_EQ(t.infinity(), a);
  EXPECT_EQ(t.r(), 3u);
}

TEST(Braid, GeneratorAction) {
  auto g = test::rng(20);
  const Matrix a = test::random_invertible(g, Q, 2), b = test::random_invertible(g, Q, 2),
               c = test::random_invertible(g, Q, 2);
  const auto t = MonodromyTuple::from_finite({a, b, c});
  const auto s = braid_act(t, BraidWord::parse("b1", 3));
  EXPECT_EQ(s[0], b);
  EXPECT_EQ(s[1], inverse(b) * a * b);
  EXPECT_EQ(s[2], c);
  EXPECT_EQ(s.infinity(), t.infinity());
  EXPECT_EQ(braid_act(s, BraidWord::parse("b1^-1", 3)), t);
}

TEST(Braid, WordErrors) {
  EXPECT_THROW(BraidWord::parse("b3", 3), Error);
  EXPECT_THROW(BraidWord::parse("b0", 3), Error);
  EXPECT_THROW(BraidWord::parse("x1", 3), Error);
  const auto t = MonodromyTuple::rank_one_ints(Q, {-1, -1, 1});
  try {
    braid_act(t, BraidWord::parse("b1 b2", 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
  EXPECT_EQ(BraidWord::parse("b2 b1^-1", 3).to_string(), "b2 b1^-1");
}

TEST(Braid, PureBraidWords) {
  EXPECT_EQ(pure_braid(1, 2, 4).to_string(), "b1 b1");
  EXPECT_EQ(pure_braid(1, 3, 4).to_string(), "b2 b1 b1 b2^-1");
  EXPECT_THROW(pure_braid(2, 2, 4), Error);
  EXPECT_THROW(pure_braid(1, 5, 4), Error);
}

TEST(BraidProperty, Relations) {
  auto g = test::rng(21);
  for (const auto& f : fields()) {
    for (int it = 0; it < 15; ++it) {
      const auto t = test::random_tuple(g, f, 2, 4);
      for (int i = 1; i <= 2; ++i) {
        const std::string a = "b" + std::to_string(i), b = "b" + std::to_string(i + 1);
        EXPECT_EQ(braid_act(t, BraidWord::parse(a + " " + b + " " + a, 4)),
                  braid_act(t, BraidWord::parse(b + " " + a + " " + b, 4)));
      }
      EXPECT_EQ(braid_act(t, BraidWord::parse("b1 b3", 4)), braid_act(t, BraidWord::parse("b3 b1", 4)));
      const BraidWord w = BraidWord::parse("b2 b1^-1 b3 b3 b2", 4);
      EXPECT_EQ(braid_act(braid_act(t, w), w.inverse()), t);
    }
  }
}

TEST(BraidProperty, PureBraidAlternateForm) {
  auto g = test::rng(22);
  for (int it = 0; it < 10; ++it) {
    const auto t = test::random_tuple(g, Q, 2, 5);
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        EXPECT_EQ(braid_act(t, pure_braid(i, j, 5)), braid_act(t, pure_braid_alternate(i, j, 5)));
  }
}

TEST(Phi, RankOneExample) {
  // (v1,v2,v3) -> (v2, v2(1-a) + v1 b, v3)
  const auto s = MonodromyTuple::from_finite({Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{3}})});
  const Matrix m = phi_matrix(s, BraidWord::parse("b1", 2));
  const Matrix expect = Matrix::from_ints(Q, {{0, 3, 0}, {1, -1, 0}, {0, 0, 1}});
  EXPECT_EQ(m, expect);
  EXPECT_TRUE(phi_matrix(s, BraidWord(2)).is_identity());
}

TEST(PhiProperty, MatchesOracleAndCocycle) {
  auto g = test::rng(23);
  for (const auto& f : fields()) {
    for (int it = 0; it < 10; ++it) {
      const auto t = test::random_tuple(g, f, 2, 3);
      const BraidWord b1 = BraidWord::parse("b1", 3), w = BraidWord::parse("b2 b1^-1 b2", 3);
      EXPECT_EQ(phi_matrix(t, w), phi_oracle(t, w));
      EXPECT_EQ(phi_matrix(t, b1) * phi_matrix(braid_act(t, b1), b1), phi_matrix(t, BraidWord::parse("b1 b1", 3)));
      // sparse application agrees with the dense matrix
      RowVector v = zero_vector(f, t.size() * t.dim());
      for (auto& x : v) x = test::random_scalar(g, f);
      std::vector<RowVector> one = {v};
      phi_apply(t, w, one);
      EXPECT_EQ(one[0], v * phi_matrix(t, w));
    }
  }
}

TEST(PhiProperty, PreservesCohomologySpaces) {
  auto g = test::rng(24);
  for (const auto& f : fields()) {
    for (int it = 0; it < 10; ++it) {
      const auto t = test::random_tuple(g, f, 2, 3);
      const BraidWord w = BraidWord::parse("b1 b2^-1 b1", 3);
      const auto tw = braid_act(t, w);
      const Matrix phi = phi_matrix(t, w);
      const auto cs = cohomology_spaces(t), cw = cohomology_spaces(tw);
      EXPECT_EQ(cs.u.dim(), cw.u.dim());
      EXPECT_EQ(cs.e.dim(), cw.e.dim());
      for (const auto& v : cs.u.basis()) EXPECT_TRUE(cw.u.contains(v * phi));
      for (const auto& v : cs.e.basis()) EXPECT_TRUE(cw.e.contains(v * phi));
    }
  }
}

TEST(Cohomology, Examples) {
  const auto t = MonodromyTuple::rank_one_ints(Q, {-1, -1, -1, -1});
  const auto cs = cohomology_spaces(t);
  EXPECT_EQ(cs.h.dim(), 3u);
  EXPECT_EQ(cs.e.dim(), 1u);
  EXPECT_EQ(cs.u.dim(), 3u);
  EXPECT_EQ(cs.dim_parabolic(), 2u);
  EXPECT_EQ(parabolic_rank_formula(t), 2);
  const auto triv = MonodromyTuple::rank_one_ints(Q, {1, 1, 1});
  EXPECT_EQ(cohomology_spaces(triv).u.dim(), 0u);
  EXPECT_EQ(parabolic_rank_formula(triv), 0);
  EXPECT_EQ(parabolic_rank_formula(MonodromyTuple::rank_one_ints(Q, {-1, -1, 1})), 0);
  const auto trivd = MonodromyTuple({Matrix::identity(Q, 3), Matrix::identity(Q, 3)});
  EXPECT_EQ(parabolic_rank_formula(trivd), 0);
}

TEST(CohomologyProperty, NestingAndOracle) {
  auto g = test::rng(25);
  std::uniform_int_distribution<std::size_t> dd(1, 3), rr(2, 4);
  for (const auto& f : fields()) {
    for (int it = 0; it < 25; ++it) {
      const auto t = test::random_tuple(g, f, dd(g), rr(g));
      const auto cs = cohomology_spaces(t);
      EXPECT_TRUE(cs.h.contains(cs.u));
      EXPECT_TRUE(cs.u.contains(cs.e));
      const Dims o = dims_oracle(t);
      EXPECT_EQ(cs.h.dim(), o.h);
      EXPECT_EQ(cs.e.dim(), o.e);
      EXPECT_EQ(cs.u.dim(), o.u);
      EXPECT_EQ(parabolic_rank_formula(t), static_cast<long>(cs.dim_parabolic()));
    }
  }
}

TEST(TupleProperty, EquivalenceUnderConjugation) {
  auto g = test::rng(26);
  for (int it = 0; it < 10; ++it) {
    const auto t = test::random_tuple(g, Q, 3, 3);
    const Matrix s = test::random_invertible(g, Q, 3);
    EXPECT_TRUE(equivalent(t, t.conjugated(s)));
  }
  const auto a = MonodromyTuple::rank_one_ints(Q, {-1, -1, 1});
  const auto b = MonodromyTuple::rank_one_ints(Q, {1, 1, 1});
  EXPECT_FALSE(equivalent(a, b));
}
