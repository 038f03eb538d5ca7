#include "mconv_cli/fixtures.hpp"

#include "mconv/error.hpp"
#include "mconv_cli/tuple_file.hpp"

namespace mconv::cli {

namespace {

const char* kL = R"({
  "field": {"kind": "rational"},
  "dimension": 1,
  "points": ["-1", "1"],
  "matrices": [[["-1"]], [["-1"]], [["1"]]]
})";

const char* kLm1 = R"({
  "field": {"kind": "rational"},
  "dimension": 1,
  "points": ["0"],
  "matrices": [[["-1"]], [["-1"]]]
})";

const char* kLstarL = R"({
  "field": {"kind": "rational"},
  "dimension": 2,
  "points": ["-2", "0", "2"],
  "matrices": [
    [["-3", "-8"], ["2", "5"]],
    [["1", "-4"], ["0", "1"]],
    [["1", "0"], ["2", "1"]],
    [["-3", "-4"], ["4", "5"]]
  ]
})";

const char* kV = R"({
  "field": {"kind": "rational"},
  "dimension": 3,
  "points": ["-2", "0", "2"],
  "matrices": [
    [["-1", "-4", "4"], ["0", "1", "0"], ["0", "0", "1"]],
    [["1", "0", "0"], ["-2", "-1", "2"], ["0", "0", "1"]],
    [["1", "0", "0"], ["0", "1", "0"], ["4", "4", "-1"]],
    [["-1", "-4", "4"], ["2", "7", "-6"], ["4", "12", "-9"]]
  ]
})";

const char* kCounts = R"({
  "q": [5, 7, 11, 13, 17, 19, 23, 29],
  "N": [27, 45, 107, 173, 323, 325, 515, 891],
  "t_p": [-3, 3, -3, -9, 17, -17, 9, 21],
  "t_p2": [-21, 51, 75, 315, 867, -357, -333, 1659]
})";

// alpha_p = (u + sqrt(d)) / p. At p = 29 the real part is 25, as forced by
// u^2 - d = p^2 together with the trace table (not -4).
const char* kAlpha = R"({
  "p": [5, 7, 11, 13, 17, 19, 23, 29],
  "u": [1, 5, -7, -11, 17, 1, -7, 25],
  "d": [-24, -24, -72, -48, 0, -360, -480, -216]
})";

const char* kNsDet = R"({
  "variable": "x",
  "coefficients": [16384, 24576, 8192]
})";

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"L", "tuple", "rank one (-1,-1,1) on {-1,1}", kL},
      {"Lm1", "tuple", "Kummer tuple (-1,-1) on {0}", kLm1},
      {"LstarL", "tuple", "2-dimensional convolution of L with itself", kLstarL},
      {"V", "tuple", "3-dimensional orthogonal tuple (M1,M2,M3,M4) on {-2,0,2}", kV},
      {"counts", "table", "point counts N(q) and traces t_p, t_{p^2} for 5 <= p <= 29", kCounts},
      {"alpha", "table", "Frobenius eigenvalue data (u, d) for 5 <= p <= 29", kAlpha},
      {"nsdet", "table", "determinant of the 19x19 intersection matrix, low to high", kNsDet},
  };
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw Error(ErrorKind::IndexOutOfRange, "unknown fixture \"" + name + "\"");
}

MonodromyTuple fixture_tuple(const std::string& name) {
  const Fixture& f = fixture(name);
  if (f.kind != "tuple") throw Error(ErrorKind::PreconditionViolation, name + " is a table");
  return parse_tuple(f.text);
}

MonodromyTuple load_tuple_ref(const std::string& ref) {
  static const std::string prefix = "fixture:";
  if (ref.rfind(prefix, 0) == 0) return fixture_tuple(ref.substr(prefix.size()));
  return load_tuple_file(ref);
}

}  // namespace mconv::cli
