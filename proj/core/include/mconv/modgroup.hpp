#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mconv/tuple.hpp"

namespace mconv {

// Residue field used for reduction mod ell: F_ell if Phi_n has a root there,
// else F_{ell^2} with the default polynomial.
Field reduction_field(const Field& source, std::int64_t ell);
Scalar reduce_mod(const Scalar& s, std::int64_t ell);
Matrix reduce_mod(const Matrix& m, std::int64_t ell);
// Points are dropped: they are coordinates over Q, not over the residue field.
MonodromyTuple reduce_mod(const MonodromyTuple& t, std::int64_t ell);
// The image of the generator zeta_n (or 1 for Q).
Scalar reduction_of_generator(const Field& source, std::int64_t ell);

struct ClosureResult {
  std::optional<std::uint64_t> order;  // nullopt: exceeds cap
  std::uint64_t visited = 0;
  bool exceeds_cap() const { return !order.has_value(); }
};

// Breadth-first closure of <gens> over a finite field.
ClosureResult group_closure(const std::vector<Matrix>& gens, std::uint64_t cap);
// Every element of the closure (in visit order); throws when it exceeds cap.
std::vector<Matrix> group_elements(const std::vector<Matrix>& gens, std::uint64_t cap);

// Multiplicative order of an invertible matrix, 0 if it exceeds bound.
std::uint64_t element_order(const Matrix& g, std::uint64_t bound);

// |GL_d(F_q)| as an exact integer.
mpz_class general_linear_order(std::size_t d, std::int64_t q);

bool group_absolutely_irreducible(const std::vector<Matrix>& gens);

struct PrimitivityReport {
  std::size_t n = 0;
  std::size_t m = 0;   // sum of rank(T_i - 1)
  std::size_t x = 0;   // largest Jordan length prime to p
  std::size_t b = 0;   // unipotent entries: block lengths prime to p
  // Smallest block size v with v >= max{x, n - m/2 + (a(v)+b)/2}; nullopt
  // when no v <= n satisfies it.
  std::optional<std::size_t> bound;
  bool primitive = false;
};

// Lower bound on the block size of any system of imprimitivity.
PrimitivityReport primitivity_bound(const MonodromyTuple& t);

// Symmetric G with g^T G g = G for all generators; nullopt if only the zero
// form exists. The returned form is non-degenerate when one exists in the
// solution space.
std::optional<Matrix> invariant_symmetric_form(const std::vector<Matrix>& gens);

struct GroupReport {
  std::optional<std::uint64_t> order;
  bool absolutely_irreducible = false;
  std::optional<Matrix> invariant_gram;
  std::optional<std::string> recognized;
};

GroupReport o3_recognition(const std::vector<Matrix>& gens, std::int64_t ell,
                           std::uint64_t cap = 100000);

}  // namespace mconv
