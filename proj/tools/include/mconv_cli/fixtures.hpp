#pragma once

#include <string>
#include <vector>

#include "mconv/tuple.hpp"

namespace mconv::cli {

struct Fixture {
  std::string name;
  std::string kind;  // "tuple" or "table"
  std::string description;
  std::string text;  // canonical JSON document
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);  // IndexOutOfRange if unknown
MonodromyTuple fixture_tuple(const std::string& name);

// Resolves "fixture:<name>" or a file path.
MonodromyTuple load_tuple_ref(const std::string& ref);

}  // namespace mconv::cli
