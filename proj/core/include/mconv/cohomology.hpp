#pragma once

#include "mconv/linalg.hpp"
#include "mconv/tuple.hpp"

namespace mconv {

// H_T, E_T, U_T inside V^{r+1}, with E_T in U_T in H_T.
struct CohomologySpaces {
  Subspace h, e, u;
  std::size_t dim_h1() const { return h.dim() - e.dim(); }
  std::size_t dim_parabolic() const { return u.dim() - e.dim(); }
};

CohomologySpaces cohomology_spaces(const MonodromyTuple& t);

// dim of the common fixed space and of the coinvariants V / sum im(T_i - 1).
std::size_t invariants_dim(const MonodromyTuple& t);
std::size_t coinvariants_dim(const MonodromyTuple& t);

// sum rank(T_i - 1) - 2d + dim V^T + dim V_T.
long parabolic_rank_formula(const MonodromyTuple& t);

}  // namespace mconv
