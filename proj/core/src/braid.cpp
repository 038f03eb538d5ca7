#include "mconv/braid.hpp"

#include "mconv/error.hpp"
#include "mconv/linalg.hpp"

namespace mconv {

namespace {

void check_word(const MonodromyTuple& t, const BraidWord& w) {
  if (static_cast<std::size_t>(w.r()) != t.r())
    throw Error(ErrorKind::IndexOutOfRange, "braid word on " + std::to_string(w.r()) +
                                                " strands applied to a tuple with r = " + std::to_string(t.r()));
}

// Tuple entries together with their inverses, updated letter by letter.
struct State {
  std::vector<Matrix> t, inv;

  explicit State(const MonodromyTuple& tuple) : t(tuple.entries()) {
    for (const auto& m : t) inv.push_back(inverse(m));
  }

  void act(const BraidLetter& l) {
    std::size_t a = static_cast<std::size_t>(l.index - 1), b = a + 1;
    if (l.exponent == 1) {
      Matrix na = t[b], nb = inv[b] * t[a] * t[b];
      Matrix ia = inv[b], ib = inv[b] * inv[a] * t[b];
      t[a] = std::move(na);
      t[b] = std::move(nb);
      inv[a] = std::move(ia);
      inv[b] = std::move(ib);
    } else {
      Matrix na = t[a] * t[b] * inv[a], nb = t[a];
      Matrix ia = t[a] * inv[b] * inv[a], ib = inv[a];
      t[a] = std::move(na);
      t[b] = std::move(nb);
      inv[a] = std::move(ia);
      inv[b] = std::move(ib);
    }
  }
};

RowVector slice(const RowVector& v, std::size_t block, std::size_t d) {
  return RowVector(v.begin() + static_cast<long>(block * d), v.begin() + static_cast<long>((block + 1) * d));
}

void store(RowVector& v, std::size_t block, std::size_t d, const RowVector& part) {
  for (std::size_t k = 0; k < d; ++k) v[block * d + k] = part[k];
}

RowVector sub(const RowVector& a, const RowVector& b) {
  RowVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

}  // namespace

MonodromyTuple braid_act(const MonodromyTuple& t, const BraidWord& w) {
  check_word(t, w);
  State s(t);
  for (const auto& l : w.letters()) s.act(l);
  return MonodromyTuple(std::move(s.t), t.maybe_points());
}

BraidWord pure_braid(int i, int j, int r) {
  if (i < 1 || i >= j || j > r) throw Error(ErrorKind::PreconditionViolation, "pure_braid needs 1 <= i < j <= r");
  std::vector<BraidLetter> l;
  for (int k = j - 1; k > i; --k) l.push_back({k, 1});
  l.push_back({i, 1});
  l.push_back({i, 1});
  for (int k = i + 1; k < j; ++k) l.push_back({k, -1});
  return BraidWord(r, std::move(l));
}

BraidWord pure_braid_alternate(int i, int j, int r) {
  if (i < 1 || i >= j || j > r) throw Error(ErrorKind::PreconditionViolation, "pure_braid needs 1 <= i < j <= r");
  std::vector<BraidLetter> l;
  for (int k = i; k <= j - 2; ++k) l.push_back({k, -1});
  l.push_back({j - 1, 1});
  l.push_back({j - 1, 1});
  for (int k = j - 2; k >= i; --k) l.push_back({k, 1});
  return BraidWord(r, std::move(l));
}

BraidWord half_twist(int q, int r) {
  if (q > r) throw Error(ErrorKind::PreconditionViolation, "half twist on more strands than available");
  std::vector<BraidLetter> l;
  for (int k = q - 1; k >= 1; --k)
    for (int m = 1; m <= k; ++m) l.push_back({m, 1});
  return BraidWord(r, std::move(l));
}

MonodromyTuple phi_apply(const MonodromyTuple& t, const BraidWord& w, std::vector<RowVector>& vectors) {
  check_word(t, w);
  const std::size_t d = t.dim();
  const Field f = t.field();
  const Matrix one = Matrix::identity(f, d);
  State s(t);
  for (const auto& l : w.letters()) {
    std::size_t a = static_cast<std::size_t>(l.index - 1), b = a + 1;
    if (l.exponent == 1) {
      // v_a' = v_b, v_b' = v_b (1 - T_b^-1 T_a T_b) + v_a T_b
      Matrix m = one - s.inv[b] * s.t[a] * s.t[b];
      for (auto& v : vectors) {
        RowVector va = slice(v, a, d), vb = slice(v, b, d);
        RowVector nb = add(vb * m, va * s.t[b]);
        store(v, a, d, vb);
        store(v, b, d, nb);
      }
    } else {
      // v_a' = (v_b - v_a (1 - T_b)) T_a^-1, v_b' = v_a
      Matrix m = one - s.t[b];
      for (auto& v : vectors) {
        RowVector va = slice(v, a, d), vb = slice(v, b, d);
        RowVector na = sub(vb, va * m) * s.inv[a];
        store(v, a, d, na);
        store(v, b, d, va);
      }
    }
    s.act(l);
  }
  return MonodromyTuple(std::move(s.t), t.maybe_points());
}

Matrix phi_matrix(const MonodromyTuple& t, const BraidWord& w) {
  std::size_t n = t.size() * t.dim();
  std::vector<RowVector> rows = Matrix::identity(t.field(), n).row_list();
  phi_apply(t, w, rows);
  return Matrix::from_rows(t.field(), rows, n);
}

}  // namespace mconv
