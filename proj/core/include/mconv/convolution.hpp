#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mconv/linalg.hpp"
#include "mconv/tuple.hpp"

namespace mconv {

Points default_left_points(std::size_t p);   // 1, ..., p
Points default_right_points(std::size_t q);  // 1009, 2018, ...

// Left tuple on u (p points), right tuple on v (q points). Missing point
// lists are filled with the defaults above.
struct ConvolutionInput {
  MonodromyTuple left;
  MonodromyTuple right;
  ConvolutionInput(MonodromyTuple l, MonodromyTuple r);
  std::size_t p() const { return left.r(); }
  std::size_t q() const { return right.r(); }
};

// |{x_i + y_j}| == p q
bool is_generic(const ConvolutionInput& inp);

// (A_i (x) 1, 1 (x) B'_j, A_{p+1} (x) B'_{q+1}) where B' is the right tuple
// re-marked for the pull-back y -> y0 - x (order of its points reversed).
MonodromyTuple circ_tuple(const ConvolutionInput& inp);

struct ConvolutionOutput {
  MonodromyTuple tuple;
  // For each finite entry, the (i, j) pairs (1-based, j indexing the right
  // tuple's own points) whose local monodromies were multiplied into it.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sources;
};

// Tuple of the middle convolution on u * v. `threads` = 0 uses all cores.
ConvolutionOutput middle_convolution_detailed(const ConvolutionInput& inp, unsigned threads = 0);
MonodromyTuple middle_convolution(const ConvolutionInput& inp, unsigned threads = 0);

// MC_lambda through Pochhammer matrices restricted to K intersected with L.
MonodromyTuple mc_lambda(const MonodromyTuple& t, const Scalar& lambda);

// Kummer tuple (lambda, lambda^-1) on {0}.
MonodromyTuple kummer_tuple(const Scalar& lambda);

struct RankFormula {
  long value;
  bool precondition_holds;  // one of the stalk stabilizers is trivial
};
RankFormula rank_formula(const ConvolutionInput& inp);

struct ConvolutionSheafCheck {
  bool pass = true;
  std::size_t index = 0;         // 1-based i of the witness
  std::optional<Scalar> tau;     // violating tau
  std::string condition;         // "(**)" or "(*)"
};
ConvolutionSheafCheck is_convolution_sheaf(const MonodromyTuple& t);

enum class IrreducibilityVerdict { Irreducible, Inconclusive };
IrreducibilityVerdict irreducibility_criterion(const MonodromyTuple& left, const std::vector<Scalar>& right_scalars);

// Predicted Jordan data at x_i + y_j (1-based keys) from the local rules.
std::map<std::pair<std::size_t, std::size_t>, JordanData> predict_local_jordan(const ConvolutionInput& inp);
JordanData predict_infinity_jordan(const MonodromyTuple& t, const Scalar& lambda);

struct PairingInfo {
  int sym;    // -1 alternating, +1 symmetric, 0 unknown
  int twist;  // weight n of the target R(-n)
  bool operator==(const PairingInfo& o) const { return sym == o.sym && twist == o.twist; }
};
PairingInfo pairing_convolve(const PairingInfo& a, const PairingInfo& b);

struct SlDemoReport {
  int m = 0, r = 0;
  Field field;
  MonodromyTuple first_tuple;   // F1
  MonodromyTuple twisted;       // (F1 * F2) twisted: (-B1, B2, ..., B_r, 1)
  MonodromyTuple result;        // the final convolution with (i, -i, 1)
  std::size_t rank = 0;
  long expected_rank = 0;       // 4r - 7
  JordanData c1, c2;
  bool c1_matches = false;
  bool c2_homology_order4 = false;
  bool determinants_in_mu4 = false;
  bool all_pass() const {
    return static_cast<long>(rank) == expected_rank && c1_matches && c2_homology_order4 && determinants_in_mu4;
  }
};
// m odd: m = 1 uses D_3 (a single rotation of order 3), m >= 3 uses D_{2m}.
SlDemoReport sl_demo(int m, int r, unsigned threads = 0);

}  // namespace mconv
