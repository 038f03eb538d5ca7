#pragma once

#include <vector>

#include "mconv/matrix.hpp"
#include "mconv/tuple.hpp"

namespace mconv {

// beta_i: (g_i, g_{i+1}) -> (g_{i+1}, g_{i+1}^-1 g_i g_{i+1}); the word's r
// must equal the tuple's number of finite entries.
MonodromyTuple braid_act(const MonodromyTuple& t, const BraidWord& w);

// beta_{i,j} = (beta_i^2)^(beta_{i+1}^-1 ... beta_{j-1}^-1) with x^y = y^-1 x y.
BraidWord pure_braid(int i, int j, int r);
// The equivalent form (beta_{j-1}^2)^(beta_{j-2} ... beta_i).
BraidWord pure_braid_alternate(int i, int j, int r);
// (b_1 ... b_{q-1})(b_1 ... b_{q-2}) ... (b_1): reverses the order of the
// first q generators up to conjugation.
BraidWord half_twist(int q, int r);

// The automorphism Phi(T, w) of V^{r+1}, composed by the cocycle rule.
Matrix phi_matrix(const MonodromyTuple& t, const BraidWord& w);

// Applies Phi(T, w) in place to row vectors of V^{r+1} without forming the
// full matrix. Returns T^w.
MonodromyTuple phi_apply(const MonodromyTuple& t, const BraidWord& w, std::vector<RowVector>& vectors);

}  // namespace mconv
