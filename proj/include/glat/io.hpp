#pragma once

// JSON input dialect and report emission.
//
//   ring     {"ring":"gf","p":3} {"ring":"gf","p":2,"k":2,"modulus":[1,1,1]}
//            {"ring":"q"} {"ring":"quat"}
//   group    {"group":"cyclic","n":3} {"group":"sym","n":3}
//            {"group":"dihedral","n":4} {"group":"table","cayley":[[...]]}
//   scalar   integer (an element code over finite fields), "n/d",
//            coefficient list over GF(p^k), 4-tuple over the quaternions
//   chi      "id" | {"frob":j} | {"inner":<quaternion>}
//   fs       {"chi":{"a":{"frob":1}},"bracket":{"a,a":"2"}}, omitted
//            entries default to id and 1
//   rep      {"rep":[{"g":"a","matrix":[[...]],"theta":{"frob":1}}]},
//            the identity element may be omitted
//
// Group elements are named by label or by decimal index.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "glat/error.hpp"
#include "glat/extension.hpp"
#include "glat/groups.hpp"
#include "glat/lattice.hpp"
#include "glat/linalg.hpp"
#include "glat/rep.hpp"
#include "glat/scalar.hpp"

namespace glat::io {

using json = nlohmann::ordered_json;

[[noreturn]] inline void schema_error(const std::string& field, const std::string& msg) {
  fail(errc::parse_error, "field '" + field + "': " + msg);
}

/// Parses text, reporting syntax errors with line and column.
inline json parse_text(const std::string& text, const std::string& source = "<input>") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(errc::parse_error, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON", {line, col});
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) schema_error(ctx + "." + key, "missing");
  return j.at(key);
}

inline std::int64_t integer(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) schema_error(ctx, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::string text(const json& j, const std::string& ctx) {
  if (!j.is_string()) schema_error(ctx, "expected a string");
  return j.get<std::string>();
}

inline Rational rational(const json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const error&) {
      schema_error(ctx, "expected \"n/d\"");
    }
  }
  schema_error(ctx, "expected an integer or \"n/d\" string");
}

}  // namespace detail

inline RingPtr parse_ring(const json& j, const std::string& ctx = "ring") {
  const std::string kind = detail::text(detail::field(j, "ring", ctx), ctx + ".ring");
  if (kind == "q") return DivisionRing::rationals();
  if (kind == "quat") return DivisionRing::quaternions();
  if (kind != "gf") schema_error(ctx + ".ring", "unknown ring '" + kind + "'");
  const std::int64_t p = detail::integer(detail::field(j, "p", ctx), ctx + ".p");
  const std::int64_t k = j.contains("k") ? detail::integer(j.at("k"), ctx + ".k") : 1;
  if (k < 1) schema_error(ctx + ".k", "degree must be positive");
  if (j.contains("modulus")) {
    if (k == 1) schema_error(ctx + ".modulus", "only extension fields take a modulus");
    std::vector<std::int64_t> m;
    for (const auto& c : j.at("modulus")) m.push_back(detail::integer(c, ctx + ".modulus"));
    return DivisionRing::extension_field(p, static_cast<int>(k), m);
  }
  return DivisionRing::gf(p, static_cast<int>(k));
}

/// "gf:3", "gf:2^2", "q", "quat".
inline RingPtr parse_ring_shorthand(const std::string& s) {
  if (s == "q") return DivisionRing::rationals();
  if (s == "quat") return DivisionRing::quaternions();
  if (s.rfind("gf:", 0) == 0) {
    std::string rest = s.substr(3);
    try {
      auto caret = rest.find('^');
      if (caret == std::string::npos) return DivisionRing::gf(std::stoll(rest));
      return DivisionRing::gf(std::stoll(rest.substr(0, caret)), std::stoi(rest.substr(caret + 1)));
    } catch (const std::logic_error&) {
    }
  }
  if (!s.empty() && s.front() == '{') return parse_ring(parse_text(s));
  schema_error("ring", "expected gf:<p>, gf:<p>^<k>, q, quat or a JSON literal, got '" + s + "'");
}

inline FiniteGroup parse_group(const json& j, const std::string& ctx = "group") {
  const std::string kind = detail::text(detail::field(j, "group", ctx), ctx + ".group");
  if (kind == "table") {
    const auto& t = detail::field(j, "cayley", ctx);
    if (!t.is_array()) schema_error(ctx + ".cayley", "expected an array of rows");
    std::vector<std::vector<std::size_t>> cayley;
    for (const auto& row : t) {
      if (!row.is_array()) schema_error(ctx + ".cayley", "expected an array of rows");
      std::vector<std::size_t> r;
      for (const auto& e : row) {
        auto v = detail::integer(e, ctx + ".cayley");
        if (v < 0) fail(errc::malformed_table, "negative entry in Cayley table");
        r.push_back(static_cast<std::size_t>(v));
      }
      cayley.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
      for (const auto& l : j.at("labels")) labels.push_back(detail::text(l, ctx + ".labels"));
    return FiniteGroup::from_table(std::move(cayley), std::move(labels));
  }
  const std::int64_t n = detail::integer(detail::field(j, "n", ctx), ctx + ".n");
  if (n < 1) schema_error(ctx + ".n", "must be positive");
  if (kind == "cyclic") return FiniteGroup::cyclic(static_cast<std::size_t>(n));
  if (kind == "sym") return FiniteGroup::symmetric(static_cast<std::size_t>(n));
  if (kind == "dihedral") return FiniteGroup::dihedral(static_cast<std::size_t>(n));
  schema_error(ctx + ".group", "unknown group '" + kind + "'");
}

/// "cyclic:3", "sym:3", "dihedral:4", or a JSON literal.
inline FiniteGroup parse_group_shorthand(const std::string& s) {
  if (!s.empty() && s.front() == '{') return parse_group(parse_text(s));
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    json j{{"group", s.substr(0, colon)}};
    try {
      j["n"] = std::stoll(s.substr(colon + 1));
    } catch (const std::logic_error&) {
      schema_error("group", "bad size in '" + s + "'");
    }
    return parse_group(j);
  }
  schema_error("group", "expected <kind>:<n> or a JSON literal, got '" + s + "'");
}

inline std::size_t parse_element(const FiniteGroup& G, const json& j, const std::string& ctx) {
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::size_t>(v) >= G.order()) schema_error(ctx, "element index out of range");
    return static_cast<std::size_t>(v);
  }
  auto label = detail::text(j, ctx);
  auto g = G.find(label);
  if (!g) schema_error(ctx, "unknown group element '" + label + "'");
  return *g;
}

inline Scalar parse_scalar(const RingPtr& K, const json& j, const std::string& ctx = "scalar") {
  switch (K->kind()) {
    case RingKind::prime_field:
    case RingKind::extension_field:
      if (j.is_number_integer()) {
        auto c = j.get<std::int64_t>();
        if (K->kind() == RingKind::prime_field) return Scalar::from_int(K, c);
        if (c < 0 || c >= K->order()) schema_error(ctx, "element code out of range for " + K->name());
        return Scalar::from_code(K, c);
      }
      if (j.is_array()) {
        std::vector<std::int64_t> c;
        for (const auto& e : j) c.push_back(detail::integer(e, ctx));
        if (c.size() != static_cast<std::size_t>(K->degree())) schema_error(ctx, "expected " + std::to_string(K->degree()) + " coefficients");
        return Scalar::from_coefficients(K, c);
      }
      return Scalar::from_rational(K, detail::rational(j, ctx));
    case RingKind::rationals: return Scalar::from_rational(K, detail::rational(j, ctx));
    case RingKind::quaternions:
      if (j.is_array()) {
        if (j.size() != 4) schema_error(ctx, "expected 4 quaternion coordinates");
        Quaternion q;
        for (std::size_t i = 0; i < 4; ++i) q.c[i] = detail::rational(j[i], ctx);
        return Scalar::from_quaternion(K, q);
      }
      return Scalar::from_rational(K, detail::rational(j, ctx));
  }
  schema_error(ctx, "unsupported ring");
}

inline json scalar_to_json(const Scalar& s) {
  switch (s.ring()->kind()) {
    case RingKind::prime_field:
    case RingKind::extension_field: return s.code();
    case RingKind::rationals: return s.to_string();
    case RingKind::quaternions: {
      json a = json::array();
      for (const auto& c : s.quaternion().c) a.push_back(rational_to_string(c));
      return a;
    }
  }
  return nullptr;
}

inline RingAutomorphism parse_automorphism(const RingPtr& K, const json& j, const std::string& ctx = "theta") {
  if (j.is_string()) {
    if (j.get<std::string>() == "id") return RingAutomorphism::identity();
    schema_error(ctx, "expected \"id\", {\"frob\":j} or {\"inner\":q}");
  }
  if (j.is_object() && j.contains("frob")) {
    auto p = detail::integer(j.at("frob"), ctx + ".frob");
    if (K->kind() != RingKind::extension_field && p != 0) schema_error(ctx + ".frob", K->name() + " has no Frobenius");
    return RingAutomorphism::frobenius(K, static_cast<int>(p));
  }
  if (j.is_object() && j.contains("inner")) {
    if (K->kind() != RingKind::quaternions) schema_error(ctx + ".inner", "inner automorphisms need the quaternions");
    return RingAutomorphism::inner(parse_scalar(K, j.at("inner"), ctx + ".inner"));
  }
  schema_error(ctx, "expected \"id\", {\"frob\":j} or {\"inner\":q}");
}

inline json automorphism_to_json(const RingAutomorphism& a) {
  switch (a.kind()) {
    case RingAutomorphism::Kind::identity: return "id";
    case RingAutomorphism::Kind::frobenius: return json{{"frob", a.power()}};
    case RingAutomorphism::Kind::inner: return json{{"inner", scalar_to_json(a.unit())}};
  }
  return nullptr;
}

inline json ring_to_json(const RingPtr& K) {
  switch (K->kind()) {
    case RingKind::prime_field: return json{{"ring", "gf"}, {"p", K->characteristic()}};
    case RingKind::extension_field: return json{{"ring", "gf"}, {"p", K->characteristic()}, {"k", K->degree()}, {"modulus", K->modulus()}};
    case RingKind::rationals: return json{{"ring", "q"}};
    case RingKind::quaternions: return json{{"ring", "quat"}};
  }
  return nullptr;
}

/// Reads chi and bracket over the given (G, K); omitted entries are id and 1.
inline FactorSystem parse_factor_system(const json& j, const FiniteGroup& G, const RingPtr& K) {
  FactorSystem fs = FactorSystem::trivial(G, K);
  if (j.contains("chi")) {
    const auto& c = j.at("chi");
    if (!c.is_object()) schema_error("chi", "expected an object keyed by group element");
    for (const auto& [key, value] : c.items()) {
      auto g = G.find(key);
      if (!g) schema_error("chi." + key, "unknown group element");
      fs.chi[*g] = parse_automorphism(K, value, "chi." + key);
    }
  }
  if (j.contains("bracket")) {
    const auto& b = j.at("bracket");
    if (!b.is_object()) schema_error("bracket", "expected an object keyed by \"g,h\"");
    for (const auto& [key, value] : b.items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) schema_error("bracket." + key, "key must be \"g,h\"");
      auto g = G.find(key.substr(0, comma));
      auto h = G.find(key.substr(comma + 1));
      if (!g || !h) schema_error("bracket." + key, "unknown group element");
      fs.bracket[*g][*h] = parse_scalar(K, value, "bracket." + key);
    }
  }
  return fs;
}

/// Non-default entries only, keyed by labels.
inline json factor_system_to_json(const FactorSystem& fs) {
  json chi = json::object(), bracket = json::object();
  const auto& G = fs.group;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (!fs.chi[g].is_identity()) chi[G.label(g)] = automorphism_to_json(fs.chi[g]);
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      if (!fs(g, h).is_one()) bracket[G.label(g) + "," + G.label(h)] = scalar_to_json(fs(g, h));
  return json{{"chi", chi}, {"bracket", bracket}};
}

inline Matrix parse_matrix(const RingPtr& K, const json& j, const std::string& ctx) {
  if (!j.is_array() || j.empty()) schema_error(ctx, "expected a non-empty array of rows");
  std::vector<Vector> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) schema_error(ctx, "matrix must be square");
    Vector r;
    for (const auto& e : row) r.push_back(parse_scalar(K, e, ctx));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(scalar_to_json(m.at(i, k)));
    rows.push_back(r);
  }
  return rows;
}

inline SemilinearProjectiveRep parse_rep(const json& j, const FiniteGroup& G, const RingPtr& K) {
  const auto& entries = detail::field(j, "rep", "document");
  if (!entries.is_array() || entries.empty()) schema_error("rep", "expected a non-empty array");
  std::size_t dim = j.contains("dim") ? static_cast<std::size_t>(detail::integer(j.at("dim"), "dim")) : 0;
  if (dim == 0) dim = detail::field(entries[0], "matrix", "rep[0]").size();
  VectorSpace V(K, dim);
  std::vector<std::optional<SemilinearMap>> maps(G.order());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string ctx = "rep[" + std::to_string(i) + "]";
    std::size_t g = parse_element(G, detail::field(entries[i], "g", ctx), ctx + ".g");
    if (maps[g]) schema_error(ctx + ".g", "element given twice");
    Matrix m = parse_matrix(K, detail::field(entries[i], "matrix", ctx), ctx + ".matrix");
    if (m.rows() != dim) schema_error(ctx + ".matrix", "expected " + std::to_string(dim) + " rows");
    auto theta = entries[i].contains("theta") ? parse_automorphism(K, entries[i].at("theta"), ctx + ".theta") : RingAutomorphism::identity();
    maps[g] = SemilinearMap(V, m, theta);
  }
  std::vector<SemilinearMap> out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (!maps[g] && g != 0) schema_error("rep", "no map for element '" + G.label(g) + "'");
    out.push_back(maps[g] ? *maps[g] : SemilinearMap::identity(V));
  }
  return SemilinearProjectiveRep(G, V, std::move(out));
}

inline json rep_to_json(const SemilinearProjectiveRep& rho) {
  json entries = json::array();
  for (std::size_t g = 0; g < rho.group().order(); ++g)
    entries.push_back(json{{"g", rho.group().label(g)}, {"matrix", matrix_to_json(rho(g).matrix())}, {"theta", automorphism_to_json(rho(g).theta())}});
  return json{{"dim", rho.space().dim}, {"rep", entries}};
}

inline json orbit_report(const GLatticeAction& A) {
  return json{{"orbits", orbits(A)}, {"fixed", fixed_points(A)}};
}

}  // namespace glat::io
