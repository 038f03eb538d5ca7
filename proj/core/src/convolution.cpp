#include "mconv/convolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mconv/braid.hpp"
#include "mconv/cohomology.hpp"
#include "mconv/error.hpp"
#include "mconv/parallel.hpp"

namespace mconv {

namespace {

constexpr long kRightSpacing = 1009;

struct Prepared {
  std::size_t p, q;
  MonodromyTuple right_marked;  // right tuple after the half twist
  Points right_marked_points;   // y'_j = y_{q+1-j}
};

Prepared prepare(const ConvolutionInput& inp) {
  const std::size_t q = inp.q();
  MonodromyTuple b = inp.right.with_points(std::nullopt);
  if (q >= 2) b = braid_act(b, half_twist(static_cast<int>(q), static_cast<int>(q)));
  Points y = inp.right.points();
  std::reverse(y.begin(), y.end());
  return {inp.p(), q, std::move(b), std::move(y)};
}

std::vector<Matrix> circ_entries(const MonodromyTuple& a, const MonodromyTuple& b) {
  const Field f = a.field();
  const Matrix one1 = Matrix::identity(f, a.dim()), one2 = Matrix::identity(f, b.dim());
  std::vector<Matrix> c;
  for (std::size_t i = 0; i < a.r(); ++i) c.push_back(kronecker(a[i], one2));
  for (std::size_t j = 0; j < b.r(); ++j) c.push_back(kronecker(one1, b[j]));
  c.push_back(kronecker(a.infinity(), b.infinity()));
  return c;
}

// phi(delta_{i,j}) = beta_{i,p+1} conjugated by beta_{p+1} ... beta_{p+j-1}.
BraidWord delta_word(std::size_t i, std::size_t j, std::size_t p, std::size_t q) {
  int r = static_cast<int>(p + q);
  std::vector<BraidLetter> conj;
  for (std::size_t k = p + 1; k < p + j; ++k) conj.push_back({static_cast<int>(k), 1});
  BraidWord y(r, conj);
  return pure_braid(static_cast<int>(i), static_cast<int>(p + 1), r).conjugated_by(y);
}

std::size_t ker_dim(const Matrix& m) { return m.rows() - rank(m - Matrix::identity(m.field(), m.rows())); }

}  // namespace

Points default_left_points(std::size_t p) {
  Points pts;
  for (std::size_t i = 1; i <= p; ++i) pts.emplace_back(static_cast<long>(i));
  return pts;
}

Points default_right_points(std::size_t q) {
  Points pts;
  for (std::size_t j = 1; j <= q; ++j) pts.emplace_back(kRightSpacing * static_cast<long>(j));
  return pts;
}

ConvolutionInput::ConvolutionInput(MonodromyTuple l, MonodromyTuple r)
    : left(l.has_points() ? std::move(l) : l.with_points(default_left_points(l.r()))),
      right(r.has_points() ? std::move(r) : r.with_points(default_right_points(r.r()))) {
  if (left.field() != right.field())
    throw Error(ErrorKind::FieldMismatch, "convolution factors live in " + left.field().to_string() + " and " +
                                              right.field().to_string());
}

bool is_generic(const ConvolutionInput& inp) {
  std::set<mpq_class> sums;
  for (const auto& x : inp.left.points())
    for (const auto& y : inp.right.points()) sums.insert(x + y);
  return sums.size() == inp.p() * inp.q();
}

MonodromyTuple circ_tuple(const ConvolutionInput& inp) {
  Prepared prep = prepare(inp);
  Points pts = inp.left.points();
  mpq_class xmax = pts.empty() ? mpq_class(0) : *std::max_element(pts.begin(), pts.end());
  mpq_class y0 = xmax + 1 + (prep.right_marked_points.empty() ? mpq_class(0) : prep.right_marked_points.front());
  for (const auto& y : prep.right_marked_points) pts.push_back(y0 - y);
  return MonodromyTuple(circ_entries(inp.left, prep.right_marked), std::move(pts));
}

ConvolutionOutput middle_convolution_detailed(const ConvolutionInput& inp, unsigned threads) {
  Prepared prep = prepare(inp);
  const std::size_t p = prep.p, q = prep.q;
  const Field f = inp.left.field();
  MonodromyTuple c(circ_entries(inp.left, prep.right_marked));
  const std::size_t big = c.size() * c.dim();

  CohomologySpaces sp = cohomology_spaces(c);
  if (!sp.u.contains(sp.e)) throw Error(ErrorKind::DimensionInconsistency, "E_T is not contained in U_T");
  // Quotient basis: echelon basis of E followed by the U vectors extending it.
  Subspace grown = sp.e;
  std::vector<RowVector> comp;
  for (const auto& v : sp.u.basis())
    if (grown.add(v)) comp.push_back(v);
  std::vector<RowVector> basis = sp.e.basis();
  basis.insert(basis.end(), comp.begin(), comp.end());
  const Coordinates coords(f, big, basis);
  const std::size_t ne = sp.e.dim(), k = comp.size();

  std::vector<Matrix> d(p * q, Matrix(f, k, k));
  parallel_for(p * q, threads, [&](std::size_t idx) {
    std::size_t i = idx / q + 1, j = idx % q + 1;
    std::vector<RowVector> rows = comp;
    MonodromyTuple moved = phi_apply(c, delta_word(i, j, p, q), rows);
    if (moved.entries() != c.entries())
      throw Error(ErrorKind::DimensionInconsistency, "delta braid does not fix the circ tuple");
    Matrix m(f, k, k);
    for (std::size_t a = 0; a < k; ++a) {
      RowVector co = coords.of(rows[a]);
      for (std::size_t b = 0; b < k; ++b) m(a, b) = co[ne + b];
    }
    d[idx] = std::move(m);
  });

  // Product order delta_{1,q} ... delta_{p,q}, ..., delta_{1,1} ... delta_{p,1};
  // consecutive entries over the same point are multiplied together.
  std::vector<Matrix> entries;
  Points labels;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sources;
  std::set<mpq_class> closed;
  for (std::size_t j = q; j >= 1; --j) {
    for (std::size_t i = 1; i <= p; ++i) {
      mpq_class label = inp.left.points()[i - 1] + prep.right_marked_points[j - 1];
      const Matrix& dm = d[(i - 1) * q + (j - 1)];
      std::pair<std::size_t, std::size_t> src{i, q + 1 - j};
      if (!labels.empty() && labels.back() == label) {
        entries.back() = entries.back() * dm;
        sources.back().push_back(src);
        continue;
      }
      if (closed.count(label))
        throw Error(ErrorKind::NonGenericUnsupported,
                    "point " + label.get_str() + " of u*v is reached by non-adjacent generators");
      if (!labels.empty()) closed.insert(labels.back());
      entries.push_back(dm);
      labels.push_back(label);
      sources.push_back({src});
    }
  }
  return {MonodromyTuple::from_finite(std::move(entries), std::move(labels)), std::move(sources)};
}

MonodromyTuple middle_convolution(const ConvolutionInput& inp, unsigned threads) {
  return middle_convolution_detailed(inp, threads).tuple;
}

MonodromyTuple kummer_tuple(const Scalar& lambda) {
  return MonodromyTuple::rank_one({lambda, lambda.inverse()}, Points{mpq_class(0)});
}

MonodromyTuple mc_lambda(const MonodromyTuple& t, const Scalar& lambda) {
  if (lambda.field() != t.field()) throw Error(ErrorKind::FieldMismatch, "lambda outside the tuple's field");
  if (lambda.is_one()) throw Error(ErrorKind::LambdaIsOne, "MC_1 is the identity functor");
  if (lambda.is_zero()) throw Error(ErrorKind::PreconditionViolation, "lambda must be nonzero");
  const Field f = t.field();
  const std::size_t p = t.r(), n = t.dim(), big = p * n;
  const Matrix one = Matrix::identity(f, n);

  std::vector<Matrix> poch;
  for (std::size_t i = 0; i < p; ++i) {
    Matrix m = Matrix::identity(f, big);
    for (std::size_t col = 0; col < p; ++col) {
      Matrix b = col < i ? lambda * (t[col] - one) : col == i ? lambda * t[col] : t[col] - one;
      m.set_block(i * n, col * n, b);
    }
    poch.push_back(std::move(m));
  }

  std::vector<RowVector> k_rows;
  for (std::size_t i = 0; i < p; ++i) {
    const Subspace im = Subspace::row_space(t[i] - one);
    for (const auto& b : im.basis()) {
      RowVector v = zero_vector(f, big);
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = b[j];
      k_rows.push_back(std::move(v));
    }
  }

  Subspace w(f, big);
  if (!k_rows.empty()) {
    Matrix km = Matrix::from_rows(f, k_rows, big);
    // L = {c : sum_k c_k A_{k+1} ... A_p lies in im(lambda A_1 ... A_p - 1)}.
    Matrix tails(f, big, n), prod = one;
    for (std::size_t kk = p; kk-- > 0;) {
      tails.set_block(kk * n, 0, prod);
      prod = t[kk] * prod;
    }
    auto ns = nullspace(lambda * prod - one);
    if (ns.empty()) {
      for (const auto& v : k_rows) w.add(v);
    } else {
      Matrix nm = Matrix::from_rows(f, ns, n).transpose();
      for (const auto& a : kernel_basis(km * tails * nm)) w.add(a * km);
    }
  }

  const std::size_t dim = w.dim();
  std::vector<Matrix> out;
  if (dim == 0) {
    for (std::size_t i = 0; i < p; ++i) out.emplace_back(f, 0, 0);
    out.emplace_back(f, 0, 0);
    return MonodromyTuple(std::move(out), t.maybe_points());
  }
  const Coordinates coords(f, big, w.basis());
  for (const auto& m : poch) {
    Matrix r(f, dim, dim);
    for (std::size_t a = 0; a < dim; ++a) r.set_row(a, coords.of(w.basis()[a] * m));
    out.push_back(std::move(r));
  }
  return MonodromyTuple::from_finite(std::move(out), t.maybe_points());
}

RankFormula rank_formula(const ConvolutionInput& inp) {
  const long n1 = static_cast<long>(inp.left.dim()), n2 = static_cast<long>(inp.right.dim());
  const long p = static_cast<long>(inp.p()), q = static_cast<long>(inp.q());
  long value = (p + q - 1) * n1 * n2;
  for (std::size_t i = 0; i < inp.p(); ++i) value -= n2 * static_cast<long>(ker_dim(inp.left[i]));
  for (std::size_t j = 0; j < inp.q(); ++j) value -= n1 * static_cast<long>(ker_dim(inp.right[j]));
  value -= static_cast<long>(ker_dim(kronecker(inp.left.infinity(), inp.right.infinity())));
  bool ok = invariants_dim(inp.left) == 0 || invariants_dim(inp.right) == 0;
  return {value, ok};
}

ConvolutionSheafCheck is_convolution_sheaf(const MonodromyTuple& t) {
  const Field f = t.field();
  const std::size_t d = t.dim();
  const Matrix one = Matrix::identity(f, d);
  for (std::size_t i = 0; i < t.r(); ++i) {
    std::vector<Scalar> taus{Scalar::one(f)};
    for (const auto& [ev, mult] : roots_in_field(char_poly(t[i]))) {
      (void)mult;
      Scalar tau = ev.inverse();
      if (std::find(taus.begin(), taus.end(), tau) == taus.end()) taus.push_back(tau);
    }
    for (const auto& tau : taus) {
      Matrix twisted = tau * t[i] - one;
      Subspace w = Subspace::row_space(twisted);
      Matrix stacked(f, d, d * t.size());
      for (std::size_t j = 0; j < t.size(); ++j) {
        Matrix m = j == i ? twisted : t[j] - one;
        if (j != i) w = w.sum(Subspace::row_space(m));
        stacked.set_block(0, j * d, m);
      }
      if (w.dim() != d) return {false, i + 1, tau, "(**)"};
      if (!kernel_basis(stacked).empty()) return {false, i + 1, tau, "(*)"};
    }
  }
  return {};
}

IrreducibilityVerdict irreducibility_criterion(const MonodromyTuple& left, const std::vector<Scalar>& right_scalars) {
  const std::size_t p = left.r(), n = left.dim();
  if (!left.infinity().is_identity())
    throw Error(ErrorKind::PreconditionViolation, "the criterion needs A_{p+1} = 1");
  if (right_scalars.empty()) throw Error(ErrorKind::PreconditionViolation, "right tuple has no finite entries");
  for (const auto& l : right_scalars) {
    if (l.field() != left.field()) throw Error(ErrorKind::FieldMismatch, "right scalars in another field");
    if (l.is_one()) throw Error(ErrorKind::PreconditionViolation, "right local monodromies must differ from 1");
  }
  if (left.has_points()) {
    std::vector<Scalar> all = right_scalars;
    Scalar prod = Scalar::one(left.field());
    for (const auto& l : right_scalars) prod *= l;
    all.push_back(prod.inverse());
    ConvolutionInput inp(left, MonodromyTuple::rank_one(all));
    if (!is_generic(inp)) throw Error(ErrorKind::PreconditionViolation, "u*v is not generic");
  }
  if (!is_convolution_sheaf(left).pass) throw Error(ErrorKind::PreconditionViolation, "left is not a convolution sheaf");
  if (!absolutely_irreducible(left.entries()))
    throw Error(ErrorKind::PreconditionViolation, "left is not absolutely irreducible");
  long value = (static_cast<long>(p) - 2) * static_cast<long>(n);
  for (std::size_t i = 0; i < p; ++i) value -= static_cast<long>(ker_dim(left[i]));
  return value > 0 ? IrreducibilityVerdict::Irreducible : IrreducibilityVerdict::Inconclusive;
}

std::map<std::pair<std::size_t, std::size_t>, JordanData> predict_local_jordan(const ConvolutionInput& inp) {
  if (!is_generic(inp)) throw Error(ErrorKind::PreconditionViolation, "prediction needs a generic u*v");
  const Field f = inp.left.field();
  const long total = rank_formula(inp).value;
  std::vector<JordanData> right_jd;
  for (std::size_t j = 0; j < inp.q(); ++j) {
    JordanData jd = jordan_data(inp.right[j]);
    for (const auto& b : jd.blocks)
      if (b.length != 1) throw Error(ErrorKind::PreconditionViolation, "right local monodromies must be semisimple");
    right_jd.push_back(std::move(jd));
  }
  std::map<std::pair<std::size_t, std::size_t>, JordanData> out;
  for (std::size_t i = 0; i < inp.p(); ++i) {
    JordanData a = jordan_data(inp.left[i]);
    for (std::size_t j = 0; j < inp.q(); ++j) {
      std::vector<JordanBlock> blocks;
      int used = 0;
      for (const auto& ab : a.blocks) {
        if (ab.length == 1 && ab.eigenvalue.is_one()) continue;
        for (const auto& bb : right_jd[j].blocks) {
          const Scalar& beta = bb.eigenvalue;
          if (beta.is_one()) continue;
          int len = ab.length;
          if (ab.eigenvalue.is_one())
            len -= 1;
          else if (ab.eigenvalue == beta.inverse())
            len += 1;
          if (len > 0) {
            blocks.push_back({ab.eigenvalue * beta, len});
            used += len;
          }
        }
      }
      for (long k = used; k < total; ++k) blocks.push_back({Scalar::one(f), 1});
      out.emplace(std::make_pair(i + 1, j + 1), JordanData(std::move(blocks)));
    }
  }
  return out;
}

JordanData predict_infinity_jordan(const MonodromyTuple& t, const Scalar& lambda) {
  if (lambda.is_one()) throw Error(ErrorKind::LambdaIsOne, "lambda must differ from 1");
  if (!is_convolution_sheaf(t).pass) throw Error(ErrorKind::PreconditionViolation, "tuple is not a convolution sheaf");
  const Field f = t.field();
  const std::size_t n = t.dim();
  const Matrix one = Matrix::identity(f, n);
  long total = 0;
  Matrix prod = one;
  for (std::size_t i = 0; i < t.r(); ++i) {
    total += static_cast<long>(rank(t[i] - one));
    prod = prod * t[i];
  }
  total += static_cast<long>(rank(lambda * prod - one)) - static_cast<long>(n);
  Scalar linv = lambda.inverse();
  std::vector<JordanBlock> blocks;
  long used = 0;
  for (const auto& b : jordan_data(t.infinity()).blocks) {
    int len = b.length;
    if (b.eigenvalue.is_one())
      len += 1;
    else if (b.eigenvalue == lambda)
      len -= 1;
    if (len > 0) {
      blocks.push_back({b.eigenvalue * linv, len});
      used += len;
    }
  }
  for (long k = used; k < total; ++k) blocks.push_back({linv, 1});
  return JordanData(std::move(blocks));
}

PairingInfo pairing_convolve(const PairingInfo& a, const PairingInfo& b) { return {-a.sym * b.sym, a.twist + b.twist + 1}; }

SlDemoReport sl_demo(int m, int r, unsigned threads) {
  if (m < 1 || m % 2 == 0) throw Error(ErrorKind::PreconditionViolation, "m must be odd and positive");
  const int order = m == 1 ? 3 : m;  // m = 1 runs with D_3
  std::vector<int> powers;
  if (m == 1) {
    powers = {1};
  } else {
    for (int k = 1; k < order; ++k)
      if (std::gcd(k, order) == 1) powers.push_back(k);
  }
  if (r < 2 + static_cast<int>(powers.size()))
    throw Error(ErrorKind::PreconditionViolation, "r must be at least 2 + phi(m)");
  const int conductor = std::lcm(4, order);
  const Field f = Field::cyclotomic(conductor);
  const Scalar z = Scalar::generator(f);
  const Scalar zm = z.pow(conductor / order), i4 = z.pow(conductor / 4);
  const Scalar one = Scalar::one(f);

  std::vector<Matrix> tail;
  for (int k : powers) tail.push_back(Matrix::diagonal({zm.pow(k), zm.pow(-k)}));
  while (static_cast<int>(tail.size()) < r - 1) tail.push_back(Matrix::scalar(-one, 2));
  Scalar rho = one;
  for (const auto& t : tail) rho *= t(0, 0);
  Matrix a1(f, 2, 2), a2(f, 2, 2);
  a1(0, 1) = one;
  a1(1, 0) = one;
  a2(0, 1) = rho;
  a2(1, 0) = rho.inverse();
  std::vector<Matrix> entries{a1, a2};
  entries.insert(entries.end(), tail.begin(), tail.end());

  MonodromyTuple first(std::move(entries), default_left_points(static_cast<std::size_t>(r)));
  MonodromyTuple b = middle_convolution(ConvolutionInput(first, kummer_tuple(-one)), threads);
  if (b.infinity() != Matrix::scalar(-one, b.dim()))
    throw Error(ErrorKind::VerificationFailed, "the first convolution does not end in -1");
  std::vector<Matrix> tw = b.entries();
  tw.front() = -tw.front();
  tw.back() = -tw.back();
  MonodromyTuple twisted(std::move(tw), b.maybe_points());

  ConvolutionOutput out =
      middle_convolution_detailed(ConvolutionInput(twisted, MonodromyTuple::rank_one({i4, -i4, one})), threads);
  SlDemoReport rep{m, r, f, std::move(first), std::move(twisted), out.tuple, out.tuple.dim(), 4L * r - 7,
                   {}, {}, false, false, false};

  auto entry_for = [&](std::size_t i, std::size_t j) -> const Matrix& {
    for (std::size_t k = 0; k < out.sources.size(); ++k)
      for (const auto& s : out.sources[k])
        if (s.first == i && s.second == j) return out.tuple[k];
    throw Error(ErrorKind::VerificationFailed, "missing entry in the demo output");
  };
  const Matrix& c1 = entry_for(1, 1);
  const Matrix& c2 = entry_for(2, 1);
  rep.c1 = jordan_data(c1);
  rep.c2 = jordan_data(c2);

  std::vector<JordanBlock> expected{{-i4, 2}};
  for (int k = 0; k < 2 * r - 6; ++k) expected.push_back({-i4, 1});
  for (int k = 0; k < 2 * r - 3; ++k) expected.push_back({one, 1});
  rep.c1_matches = rep.c1 == JordanData(std::move(expected));

  bool semisimple = std::all_of(rep.c2.blocks.begin(), rep.c2.blocks.end(), [](const JordanBlock& b) { return b.length == 1; });
  const Matrix id = Matrix::identity(f, c2.rows());
  rep.c2_homology_order4 =
      semisimple && rank(c2 - id) == 1 && c2.pow(4).is_identity() && !c2.pow(2).is_identity();

  rep.determinants_in_mu4 = true;
  for (std::size_t k = 0; k < out.tuple.r(); ++k) {
    Scalar dt = det(out.tuple[k]);
    if (!(dt == one || dt == -one || dt == i4 || dt == -i4)) rep.determinants_in_mu4 = false;
  }
  return rep;
}

}  // namespace mconv
