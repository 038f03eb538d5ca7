#include "mconv_cli/tuple_file.hpp"

#include <fstream>
#include <sstream>

#include "mconv/error.hpp"

namespace mconv::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(0, "tuple file: " + what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json field_to_json(const Field& f) {
  json j;
  switch (f.kind()) {
    case FieldKind::Rational:
      j["kind"] = "rational";
      break;
    case FieldKind::Cyclotomic:
      j["kind"] = "cyclotomic";
      j["order"] = f.conductor();
      break;
    case FieldKind::Finite:
      j["kind"] = "finite";
      j["p"] = f.characteristic();
      j["k"] = f.degree();
      if (f.degree() == 2) j["modulus"] = {f.quad_c0(), f.quad_c1()};
      break;
  }
  return j;
}

Field field_from_json(const json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  try {
    const std::string kind = member(j, "kind").get<std::string>();
    if (kind == "rational") return Field::rational();
    if (kind == "cyclotomic") return Field::cyclotomic(member(j, "order").get<int>());
    if (kind == "finite") {
      const auto p = member(j, "p").get<std::int64_t>();
      const int k = j.value("k", 1);
      if (k == 2 && j.contains("modulus")) {
        const auto& m = j.at("modulus");
        return Field::finite_quadratic(p, m.at(0).get<std::int64_t>(), m.at(1).get<std::int64_t>());
      }
      return Field::finite(p, k);
    }
    bad("unknown field kind \"" + kind + "\"");
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json tuple_to_json(const MonodromyTuple& t) {
  json j;
  j["field"] = field_to_json(t.field());
  j["dimension"] = t.dim();
  if (t.has_points()) {
    json pts = json::array();
    for (const auto& x : t.points()) pts.push_back(x.get_str());
    j["points"] = pts;
  }
  json mats = json::array();
  for (const auto& m : t.entries()) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["matrices"] = mats;
  return j;
}

MonodromyTuple tuple_from_json(const json& j) {
  const Field f = field_from_json(member(j, "field"));
  std::size_t d = 0;
  try {
    d = member(j, "dimension").get<std::size_t>();
  } catch (const json::exception& e) {
    bad(e.what());
  }
  const json& mats = member(j, "matrices");
  if (!mats.is_array() || mats.size() < 2) bad("need at least two matrices");
  std::vector<Matrix> entries;
  for (const auto& mj : mats) {
    if (!mj.is_array() || mj.size() != d) bad("matrix row count differs from dimension");
    Matrix m(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const auto& row = mj[i];
      if (!row.is_array() || row.size() != d) bad("matrix column count differs from dimension");
      for (std::size_t c = 0; c < d; ++c) {
        if (row[c].is_number_integer())
          m(i, c) = Scalar(f, row[c].get<long>());
        else if (row[c].is_string())
          m(i, c) = parse_scalar(row[c].get<std::string>(), f);
        else
          bad("entries must be strings or integers");
      }
    }
    entries.push_back(std::move(m));
  }
  std::optional<Points> points;
  if (j.contains("points") && !j.at("points").is_null()) {
    Points pts;
    for (const auto& pj : j.at("points")) {
      try {
        mpq_class v(pj.is_string() ? pj.get<std::string>() : std::to_string(pj.get<long>()));
        v.canonicalize();
        pts.push_back(v);
      } catch (const std::invalid_argument&) {
        bad("bad point coordinate");
      }
    }
    points = std::move(pts);
  }
  return MonodromyTuple(std::move(entries), std::move(points));
}

std::string format_tuple(const MonodromyTuple& t) { return tuple_to_json(t).dump(2) + "\n"; }

MonodromyTuple parse_tuple(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "tuple file is not valid JSON");
  }
  return tuple_from_json(j);
}

MonodromyTuple load_tuple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tuple(ss.str());
}

void save_tuple_file(const std::string& path, const MonodromyTuple& t) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << format_tuple(t);
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

}  // namespace mconv::cli
