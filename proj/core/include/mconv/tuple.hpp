#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mconv/matrix.hpp"

namespace mconv {

using Points = std::vector<mpq_class>;

// (T_1, ..., T_{r+1}) with T_1 ... T_{r+1} = 1. The last entry is the loop
// around infinity; the optional points are the r finite punctures.
class MonodromyTuple {
 public:
  MonodromyTuple(std::vector<Matrix> entries, std::optional<Points> points = std::nullopt);
  // Appends the inverse of the product as the infinity entry.
  static MonodromyTuple from_finite(std::vector<Matrix> finite, std::optional<Points> points = std::nullopt);
  // Rank-one tuple from all r+1 scalars.
  static MonodromyTuple rank_one(const std::vector<Scalar>& values, std::optional<Points> points = std::nullopt);
  static MonodromyTuple rank_one_ints(Field f, const std::vector<long>& values,
                                      std::optional<Points> points = std::nullopt);

  const Field& field() const { return entries_.front().field(); }
  std::size_t dim() const { return entries_.front().rows(); }
  // Number of finite points.
  std::size_t r() const { return entries_.size() - 1; }
  std::size_t size() const { return entries_.size(); }
  const Matrix& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Matrix>& entries() const { return entries_; }
  const Matrix& infinity() const { return entries_.back(); }

  bool has_points() const { return points_.has_value(); }
  const Points& points() const;
  const std::optional<Points>& maybe_points() const { return points_; }
  MonodromyTuple with_points(std::optional<Points> points) const;

  MonodromyTuple embedded(const Field& target) const;
  // S^-1 T_i S for all i.
  MonodromyTuple conjugated(const Matrix& s) const;

  bool operator==(const MonodromyTuple& o) const {
    return entries_ == o.entries_ && points_ == o.points_;
  }
  bool operator!=(const MonodromyTuple& o) const { return !(*this == o); }

 private:
  std::vector<Matrix> entries_;
  std::optional<Points> points_;
};

// Equivalence up to simultaneous conjugacy.
bool equivalent(const MonodromyTuple& a, const MonodromyTuple& b);

struct BraidLetter {
  int index;     // 1-based generator index
  int exponent;  // +1 or -1
  bool operator==(const BraidLetter& o) const { return index == o.index && exponent == o.exponent; }
};

// Word in beta_1, ..., beta_{r-1}; acts left to right.
class BraidWord {
 public:
  explicit BraidWord(int r, std::vector<BraidLetter> letters = {});
  // Letters "b<k>" or "b<k>^-1" separated by whitespace.
  static BraidWord parse(std::string_view text, int r);

  int r() const { return r_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& o) const;
  // y^-1 x y
  BraidWord conjugated_by(const BraidWord& y) const;

  bool operator==(const BraidWord& o) const { return r_ == o.r_ && letters_ == o.letters_; }
  std::string to_string() const;

 private:
  int r_;
  std::vector<BraidLetter> letters_;
};

}  // namespace mconv
