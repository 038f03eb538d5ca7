#pragma once

#include <string>

#include <json.hpp>

#include "mconv/tuple.hpp"

namespace mconv::cli {

using json = nlohmann::ordered_json;

json field_to_json(const Field& f);
Field field_from_json(const json& j);

// {"field": {...}, "dimension": d, "points": [...]?, "matrices": [[[..]]]}
// with every entry (including the one at infinity) as row-major scalar
// strings. Loading re-checks the product relation.
json tuple_to_json(const MonodromyTuple& t);
MonodromyTuple tuple_from_json(const json& j);

std::string format_tuple(const MonodromyTuple& t);  // canonical text
MonodromyTuple parse_tuple(const std::string& text);

MonodromyTuple load_tuple_file(const std::string& path);
void save_tuple_file(const std::string& path, const MonodromyTuple& t);

}  // namespace mconv::cli
