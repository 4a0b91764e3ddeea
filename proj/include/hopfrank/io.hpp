#pragma once

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <tuple>

#include <json.hpp>

#include "hopfrank/families.hpp"
#include "hopfrank/hopf.hpp"
#include "hopfrank/rep.hpp"

namespace hopfrank {

/// Shared instance of a named family, built once per (family, n, p).
inline AlgebraPtr family_algebra(const std::string& family, unsigned n, std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, unsigned, std::uint32_t>, AlgebraPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(family, n, p);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  AlgebraPtr a;
  if (family == "d-taft") {
    a = make_drinfeld_double(n, make_prime_field(p, n));
  } else if (family == "basic-A") {
    if (n != 2) fail(errc::unsupported_algebra, "basic-A has n = 2");
    a = make_basic_algebra_A(make_prime_field(p, 2));
  } else {
    fail(errc::unsupported_algebra, "unknown family '" + family + "'");
  }
  cache.emplace(key, a);
  return a;
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  fail(errc::parse_error, where + ": " + what);
}

inline const nlohmann::json& field_of(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) parse_fail(std::string("field '") + key + "'", "missing");
  return j.at(key);
}

inline std::uint64_t unsigned_of(const nlohmann::json& j, const char* key) {
  const auto& v = field_of(j, key);
  if (!v.is_number_unsigned()) parse_fail(std::string("field '") + key + "'", "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace detail

/// Parses a module in the JSON exchange format and verifies the relations.
inline Rep parse_module_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::parse_fail("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!j.is_object()) detail::parse_fail("document", "expected an object");
  const std::uint64_t p = detail::unsigned_of(j, "p");
  const std::uint64_t n = detail::unsigned_of(j, "n");
  const std::uint64_t dim = detail::unsigned_of(j, "dim");
  const auto& fam = detail::field_of(j, "family");
  if (!fam.is_string()) detail::parse_fail("field 'family'", "expected a string");
  const std::string family = fam.get<std::string>();
  if (family != "d-taft" && family != "basic-A") detail::parse_fail("field 'family'", "unknown family '" + family + "'");
  if (p > 0xFFFF || n > 64) detail::parse_fail("field 'p'/'n'", "out of range");
  AlgebraPtr alg = family_algebra(family, static_cast<unsigned>(n), static_cast<std::uint32_t>(p));
  const auto& gens = detail::field_of(j, "generators");
  if (!gens.is_object()) detail::parse_fail("field 'generators'", "expected an object");
  for (auto it = gens.begin(); it != gens.end(); ++it) {
    bool known = false;
    for (const auto& g : alg->gen_names) known = known || g == it.key();
    if (!known) detail::parse_fail("generators." + it.key(), "not a generator of " + family);
  }
  std::vector<Matrix> mats;
  for (const auto& name : alg->gen_names) {
    const std::string where = "generators." + name;
    if (!gens.contains(name)) detail::parse_fail(where, "missing");
    const auto& rows = gens.at(name);
    if (!rows.is_array() || rows.size() != dim) detail::parse_fail(where, "expected " + std::to_string(dim) + " rows");
    Matrix m(alg->field, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const auto& row = rows[r];
      if (!row.is_array() || row.size() != dim)
        detail::parse_fail(where + "[" + std::to_string(r) + "]", "expected " + std::to_string(dim) + " entries");
      for (std::size_t c = 0; c < dim; ++c) {
        const auto& e = row[c];
        const std::string at = where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
        if (!e.is_number_unsigned()) detail::parse_fail(at, "expected a canonical residue");
        const auto v = e.get<std::uint64_t>();
        if (v >= p) detail::parse_fail(at, "entry " + std::to_string(v) + " is not a residue mod " + std::to_string(p));
        m(r, c) = static_cast<scalar>(v);
      }
    }
    mats.push_back(std::move(m));
  }
  if (dim == 0) return Rep(alg, 0, std::move(mats));
  return rep_from_generators(alg, std::move(mats));
}

inline Rep read_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_module_json(ss.str());
  } catch (const error& e) {
    if (e.code() == errc::parse_error) fail(errc::parse_error, path + ": " + e.what());
    throw;
  }
}

inline nlohmann::ordered_json module_to_json(const Rep& m) {
  const Algebra& a = m.alg();
  if (a.family != "d-taft" && a.family != "basic-A")
    fail(errc::unsupported_algebra, "only d-taft and basic-A modules are serializable");
  nlohmann::ordered_json j;
  j["p"] = a.field.p();
  j["family"] = a.family;
  j["n"] = a.n;
  j["dim"] = m.dim();
  nlohmann::ordered_json gens = nlohmann::ordered_json::object();
  for (std::size_t g = 0; g < a.gen_names.size(); ++g) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    const Matrix& mat = m.gen(g);
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(mat(r, c));
      rows.push_back(std::move(row));
    }
    gens[a.gen_names[g]] = std::move(rows);
  }
  j["generators"] = std::move(gens);
  return j;
}

inline std::string write_module_json(const Rep& m) { return module_to_json(m).dump() + "\n"; }

inline void write_module_file(const Rep& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, path + ": cannot write");
  out << write_module_json(m);
}

/// Algebra descriptor: parameters and verification results. Structure
/// constants are rebuilt from the parameters, not stored.
inline nlohmann::ordered_json algebra_descriptor(const Algebra& a) {
  nlohmann::ordered_json j;
  j["p"] = a.field.p();
  j["family"] = a.family;
  j["n"] = a.n;
  j["q"] = a.q;
  j["dim"] = a.dim;
  j["generators"] = a.gen_names;
  j["basis"] = a.labels;
  return j;
}

}  // namespace hopfrank
