#pragma once

#include <cstdint>
#include <random>

#include "mconv/matrix.hpp"
#include "mconv/tuple.hpp"

namespace mconv::test {

// Seed for randomized suites; set from --seed, fixed by default.
std::uint64_t& seed();
// Independent stream per test, so adding a test never perturbs another.
std::mt19937_64 rng(std::uint64_t salt);

Scalar random_scalar(std::mt19937_64& g, const Field& f, long lo = -3, long hi = 3);
Matrix random_matrix(std::mt19937_64& g, const Field& f, std::size_t d, long lo = -3, long hi = 3);
Matrix random_invertible(std::mt19937_64& g, const Field& f, std::size_t d);
// r finite entries with the infinity entry closing the product.
MonodromyTuple random_tuple(std::mt19937_64& g, const Field& f, std::size_t d, std::size_t r);

// The L*L tuple and its convolution with the Kummer tuple of -1, entry for
// entry as printed in the worked example.
MonodromyTuple printed_LstarL();
MonodromyTuple printed_V();

}  // namespace mconv::test
