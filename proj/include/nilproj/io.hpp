#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "nilproj/catalog.hpp"

namespace nilproj {

using json = nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("cannot parse '" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Algebra files:
// {"dim": m, "basis": ["X1", ...],
//  "brackets": [{"i": 5, "j": 4, "out": {"3": "1"}}, ...]}
// Coefficients are rational strings; only i > j entries are permitted and
// duplicates are rejected rather than summed.
// ---------------------------------------------------------------------------

inline LieAlgebra<Rational> algebra_from_json(const json& j,
                                              int max_dim = kDefaultMaxDimension) {
  if (!j.is_object() || !j.contains("dim")) throw ParseError("algebra file needs a 'dim' field");
  if (!j["dim"].is_number_integer()) throw ParseError("'dim' must be an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw BadParameter("algebra dimension must be positive");
  std::string name = j.value("name", "");
  BracketTable<Rational> table;
  std::set<std::pair<int, int>> seen;
  for (const json& entry : j.value("brackets", json::array())) {
    if (!entry.contains("i") || !entry.contains("j") || !entry.contains("out"))
      throw ParseError("bracket entry needs fields i, j, out");
    const int i = entry["i"].get<int>();
    const int jj = entry["j"].get<int>();
    if (!seen.insert({i, jj}).second)
      throw BadIndex("duplicate bracket entry (" + std::to_string(i) + ", " +
                     std::to_string(jj) + ")");
    Vector<Rational> out(dim);
    for (const auto& [key, value] : entry["out"].items()) {
      int target = 0;
      try {
        target = std::stoi(key);
      } catch (const std::exception&) {
        throw ParseError("bad coordinate index '" + key + "'");
      }
      if (target < 1 || target > dim) throw BadIndex("bracket output index out of range");
      out[target - 1] = value.is_string() ? parse_rational(value.get<std::string>())
                                          : Rational(value.get<long>());
    }
    table.emplace(std::make_pair(i, jj), std::move(out));
  }
  return LieAlgebra<Rational>::validate(dim, table, std::move(name), max_dim);
}

inline LieAlgebra<Rational> load_algebra(const std::string& path,
                                         int max_dim = kDefaultMaxDimension) {
  return algebra_from_json(load_json_file(path), max_dim);
}

inline json algebra_to_json(const LieAlgebra<Rational>& alg) {
  json brackets = json::array();
  for (const auto& [key, value] : alg.table()) {
    json out = json::object();
    for (int r = 0; r < alg.dim(); ++r)
      if (!(sgn(value[r]) == 0)) out[std::to_string(r + 1)] = value[r].get_str();
    brackets.push_back({{"i", key.first}, {"j", key.second}, {"out", std::move(out)}});
  }
  json basis = json::array();
  for (int i = 1; i <= alg.dim(); ++i) basis.push_back("X" + std::to_string(i));
  json j{{"dim", alg.dim()}, {"basis", std::move(basis)}, {"brackets", std::move(brackets)}};
  if (!alg.name().empty()) j["name"] = alg.name();
  return j;
}

// ---------------------------------------------------------------------------
// Subspace files: {"ambient_dim": m, "columns": [["1","0","-1/2"], ...]}
// ---------------------------------------------------------------------------

inline Matrix<Rational> columns_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("columns"))
    throw ParseError("subspace file needs 'ambient_dim' and 'columns'");
  const int m = j["ambient_dim"].get<int>();
  if (m < 0) throw ParseError("negative ambient dimension");
  const json& cols = j["columns"];
  if (!cols.is_array()) throw ParseError("'columns' must be an array");
  Matrix<Rational> basis(m, static_cast<int>(cols.size()));
  for (int c = 0; c < basis.cols(); ++c) {
    const json& col = cols[static_cast<std::size_t>(c)];
    if (!col.is_array() || static_cast<int>(col.size()) != m)
      throw ParseError("column " + std::to_string(c) + " has wrong length");
    for (int r = 0; r < m; ++r) {
      const json& x = col[static_cast<std::size_t>(r)];
      basis(r, c) = x.is_string() ? parse_rational(x.get<std::string>())
                                  : Rational(x.get<long>());
    }
  }
  return basis;
}

inline Subspace<Rational> subspace_from_json(const json& j) {
  return Subspace<Rational>(columns_from_json(j));
}

inline Subspace<Rational> load_subspace(const std::string& path) {
  return subspace_from_json(load_json_file(path));
}

inline Flag<Rational> load_flag(const std::string& path) {
  Matrix<Rational> basis = columns_from_json(load_json_file(path));
  if (basis.rows() != basis.cols()) throw ParseError("flag file must hold a square basis");
  return Flag<Rational>(std::move(basis));
}

template <class S>
json matrix_to_json(const Matrix<S>& m) {
  json cols = json::array();
  for (int c = 0; c < m.cols(); ++c) {
    json col = json::array();
    for (int r = 0; r < m.rows(); ++r) col.push_back(format_scalar(m(r, c)));
    cols.push_back(std::move(col));
  }
  return json{{"ambient_dim", m.rows()}, {"columns", std::move(cols)}};
}

template <class S>
json subspace_to_json(const Subspace<S>& w) {
  return matrix_to_json(w.canonical());
}

template <class S>
json vector_to_json(const Vector<S>& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(format_scalar(v[i]));
  return a;
}

// ---------------------------------------------------------------------------
// Command-line vectors: "1,-1/2,0" inline or "@file" where the file holds
// either a JSON array of entries or the same comma-separated text.
// ---------------------------------------------------------------------------

template <class S>
Vector<S> parse_vector_arg(const std::string& arg, int expected_dim) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot open '" + arg.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  // trim
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty vector argument");
  text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);

  std::vector<S> entries;
  if (text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad vector JSON: ") + e.what());
    }
    for (const json& x : j)
      entries.push_back(x.is_string() ? parse_scalar<S>(x.get<std::string>())
                                      : parse_scalar<S>(x.dump()));
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto a = item.find_first_not_of(" \t\r\n");
      if (a == std::string::npos) throw ParseError("empty vector entry");
      entries.push_back(parse_scalar<S>(item.substr(a, item.find_last_not_of(" \t\r\n") - a + 1)));
    }
  }
  if (static_cast<int>(entries.size()) != expected_dim)
    throw ParseError("vector has " + std::to_string(entries.size()) + " entries, expected " +
                     std::to_string(expected_dim));
  return Vector<S>(std::move(entries));
}

}  // namespace nilproj
