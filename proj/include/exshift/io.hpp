#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "exshift/cartan.hpp"
#include "exshift/errors.hpp"
#include "exshift/exterior.hpp"
#include "exshift/simplicial.hpp"
#include "exshift/symmetric.hpp"

namespace exshift {

using Json = nlohmann::ordered_json;

/// Largest ambient dimension accepted from files.
inline constexpr int kMaxFileVariables = 12;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace detail {

inline int read_n(const Json& j, int limit) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) throw InputError("expected an object with integer field \"n\"");
  const auto n = j["n"].get<long long>();
  if (n < 1 || n > limit) throw InputError("n must lie in [1, " + std::to_string(limit) + "]");
  return static_cast<int>(n);
}

inline const Json& read_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw InputError(std::string("expected an array field \"") + key + "\"");
  return j[key];
}

inline Mask read_vertex_set(const Json& list, int n) {
  if (!list.is_array()) throw InputError("vertex sets must be arrays of integers");
  Mask m = 0;
  for (const auto& v : list) {
    if (!v.is_number_integer()) throw InputError("vertices must be integers");
    const auto x = v.get<long long>();
    if (x < 1 || x > n) throw InputError("vertex " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
    if (has(m, static_cast<int>(x))) throw InputError("vertex " + std::to_string(x) + " repeated");
    m |= bit(static_cast<int>(x));
  }
  return m;
}

}  // namespace detail

inline SimplicialComplex complex_from_json(const Json& j) {
  const int n = detail::read_n(j, kMaxFileVariables);
  std::vector<Mask> facets;
  for (const auto& f : detail::read_array(j, "facets")) facets.push_back(detail::read_vertex_set(f, n));
  return SimplicialComplex(n, facets);
}

inline Json to_json(const SimplicialComplex& c) {
  Json facets = Json::array();
  for (Mask f : c.facets()) facets.push_back(indices(f));
  return Json{{"n", c.n()}, {"facets", facets}};
}

struct ExteriorIdealInput {
  int n = 0;
  std::vector<Mask> generators;
};

struct SymmetricIdealInput {
  int n = 0;
  std::vector<SymMonomial> generators;
};

using IdealInput = std::variant<ExteriorIdealInput, SymmetricIdealInput>;

inline IdealInput ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j["ring"].is_string()) throw InputError("expected field \"ring\": \"exterior\" or \"symmetric\"");
  const std::string ring = j["ring"].get<std::string>();
  const auto& gens = detail::read_array(j, "generators");
  if (ring == "exterior") {
    ExteriorIdealInput in{detail::read_n(j, kMaxFileVariables), {}};
    for (const auto& g : gens) in.generators.push_back(detail::read_vertex_set(g, in.n));
    return in;
  }
  if (ring == "symmetric") {
    SymmetricIdealInput in{detail::read_n(j, kMaxSymVariables), {}};
    for (const auto& g : gens) {
      if (!g.is_array() || static_cast<int>(g.size()) != in.n) throw InputError("symmetric generators are exponent vectors of length n");
      SymMonomial m;
      for (const auto& e : g) {
        if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 64) throw InputError("exponents must be integers in [0, 64]");
        m.exponents.push_back(static_cast<int>(e.get<long long>()));
      }
      in.generators.push_back(std::move(m));
    }
    return in;
  }
  throw InputError("unknown ring \"" + ring + "\"");
}

inline Json ideal_to_json(int n, const std::vector<Mask>& gens) {
  Json g = Json::array();
  for (Mask m : gens) g.push_back(indices(m));
  return Json{{"n", n}, {"ring", "exterior"}, {"generators", g}};
}

inline Json ideal_to_json(int n, const std::vector<SymMonomial>& gens) {
  Json g = Json::array();
  for (const auto& m : gens) {
    auto e = m.exponents;
    e.resize(n, 0);
    g.push_back(e);
  }
  return Json{{"n", n}, {"ring", "symmetric"}, {"generators", g}};
}

/// Entries keyed "i,j,p" in the order p, i, j; with `only_p` set, just that slice.
inline Json to_json(const CartanBettiTable& t, int only_p = 0) {
  Json table = Json::object();
  for (int p = 1; p <= t.n(); ++p) {
    if (only_p && p != only_p) continue;
    for (int i = 0; i <= t.i_max(); ++i)
      for (int j = 0; j <= t.n() + i; ++j) table[std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(p)] = t.at(i, j, p);
  }
  return Json{{"table", table}, {"i_max", t.i_max()}, {"truncated_above_p", t.truncated_above_p()}};
}

/// Readable form of an exterior polynomial, e.g. "3*e[1,2] + e[3,4]".
inline std::string format_polynomial(const ExtPolynomial& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p) {
    if (!c) continue;
    if (!first) out << " + ";
    if (c != 1) out << c << "*";
    out << "e" << format_mask(m);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace exshift
