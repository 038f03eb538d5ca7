#include "mconv/tuple.hpp"

#include <cctype>
#include <set>

#include "mconv/error.hpp"
#include "mconv/linalg.hpp"

namespace mconv {

MonodromyTuple::MonodromyTuple(std::vector<Matrix> entries, std::optional<Points> points)
    : entries_(std::move(entries)), points_(std::move(points)) {
  if (entries_.empty()) throw Error(ErrorKind::DimensionMismatch, "a tuple needs at least one entry");
  const Field f = entries_.front().field();
  std::size_t d = entries_.front().rows();
  Matrix prod = Matrix::identity(f, d);
  for (const auto& m : entries_) {
    if (m.field() != f) throw Error(ErrorKind::FieldMismatch, "tuple entries differ in field");
    if (m.rows() != d || m.cols() != d) throw Error(ErrorKind::DimensionMismatch, "tuple entries differ in size");
    prod = prod * m;
  }
  for (const auto& m : entries_)
    if (!is_invertible(m)) throw Error(ErrorKind::NotInvertible, "tuple entry is singular");
  if (!prod.is_identity()) throw Error(ErrorKind::ProductRelation, "product of the entries is not 1");
  if (points_) {
    if (points_->size() != r())
      throw Error(ErrorKind::InvalidPoints, "number of points differs from the number of finite entries");
    std::set<mpq_class> seen(points_->begin(), points_->end());
    if (seen.size() != points_->size()) throw Error(ErrorKind::InvalidPoints, "points are not distinct");
  }
}

MonodromyTuple MonodromyTuple::from_finite(std::vector<Matrix> finite, std::optional<Points> points) {
  if (finite.empty()) throw Error(ErrorKind::DimensionMismatch, "no finite entries");
  Matrix prod = Matrix::identity(finite.front().field(), finite.front().rows());
  for (const auto& m : finite) prod = prod * m;
  finite.push_back(inverse(prod));
  return MonodromyTuple(std::move(finite), std::move(points));
}

MonodromyTuple MonodromyTuple::rank_one(const std::vector<Scalar>& values, std::optional<Points> points) {
  std::vector<Matrix> e;
  for (const auto& v : values) e.push_back(Matrix::scalar(v, 1));
  return MonodromyTuple(std::move(e), std::move(points));
}

MonodromyTuple MonodromyTuple::rank_one_ints(Field f, const std::vector<long>& values,
                                             std::optional<Points> points) {
  std::vector<Scalar> s;
  for (long v : values) s.emplace_back(f, v);
  return rank_one(s, std::move(points));
}

const Points& MonodromyTuple::points() const {
  if (!points_) throw Error(ErrorKind::InvalidPoints, "tuple carries no points");
  return *points_;
}

MonodromyTuple MonodromyTuple::with_points(std::optional<Points> points) const {
  return MonodromyTuple(entries_, std::move(points));
}

MonodromyTuple MonodromyTuple::embedded(const Field& target) const {
  std::vector<Matrix> e;
  for (const auto& m : entries_) e.push_back(embed(m, target));
  return MonodromyTuple(std::move(e), points_);
}

MonodromyTuple MonodromyTuple::conjugated(const Matrix& s) const {
  Matrix inv = inverse(s);
  std::vector<Matrix> e;
  for (const auto& m : entries_) e.push_back(inv * m * s);
  return MonodromyTuple(std::move(e), points_);
}

bool equivalent(const MonodromyTuple& a, const MonodromyTuple& b) {
  if (a.field() != b.field() || a.size() != b.size() || a.dim() != b.dim()) return false;
  return conjugacy_solve(a.entries(), b.entries()).has_value();
}

BraidWord::BraidWord(int r, std::vector<BraidLetter> letters) : r_(r), letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > r_ - 1)
      throw Error(ErrorKind::IndexOutOfRange,
                  "braid generator b" + std::to_string(l.index) + " outside 1.." + std::to_string(r_ - 1));
    if (l.exponent != 1 && l.exponent != -1)
      throw Error(ErrorKind::PreconditionViolation, "braid exponents are +1 or -1");
  }
}

BraidWord BraidWord::parse(std::string_view text, int r) {
  std::vector<BraidLetter> letters;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != 'b') throw ParseError(i, "expected 'b'");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || i - start > 6) throw ParseError(i, "expected a generator index");
    int index = std::stoi(std::string(text.substr(start, i - start)));
    int exponent = 1;
    if (text.substr(i, 3) == "^-1") {
      exponent = -1;
      i += 3;
    } else if (i < text.size() && text[i] == '^') {
      throw ParseError(i, "only the exponent ^-1 is allowed");
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError(i, "letters must be separated by whitespace");
    letters.push_back({index, exponent});
    skip();
  }
  return BraidWord(r, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> inv;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back({it->index, -it->exponent});
  return BraidWord(r_, std::move(inv));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (o.r_ != r_) throw Error(ErrorKind::DimensionMismatch, "braid words on different strand counts");
  std::vector<BraidLetter> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(r_, std::move(l));
}

BraidWord BraidWord::conjugated_by(const BraidWord& y) const { return y.inverse() * *this * y; }

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += " ";
    out += "b" + std::to_string(l.index);
    if (l.exponent == -1) out += "^-1";
  }
  return out;
}

}  // namespace mconv
