#include "matmor/io.hpp"

#include <fstream>
#include <sstream>

#include "matmor/error.hpp"

namespace matmor::io {

namespace {

const json& require_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error("schema", std::string("missing field '") + key + "'");
  }
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (!v.is_number_integer()) {
    throw Error("schema", std::string("field '") + key + "' must be an integer");
  }
  return v.get<int>();
}

}  // namespace

json rational_to_json(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

Rat rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_object()) {
    auto part = [&](const char* key) -> BigInt {
      const json& v = require_field(j, key);
      if (v.is_number_integer()) return BigInt(v.get<long>());
      if (v.is_string()) {
        try {
          return BigInt(v.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw Error("schema", "malformed integer in rational");
        }
      }
      throw Error("schema", "rational parts must be integers or strings");
    };
    BigInt den = part("den");
    if (den == 0) throw Error("schema", "rational with zero denominator");
    Rat r(part("num"), den);
    r.canonicalize();
    return r;
  }
  throw Error("schema", "expected rational (int, \"a/b\", or {num, den})");
}

json subset_to_json(Subset s) { return json(elements_of(s)); }

Graph graph_from_json(const json& j) {
  int v = int_field(j, "vertices");
  const json& edges_j = require_field(j, "edges");
  if (!edges_j.is_array()) throw Error("schema", "edges must be an array");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_j.size());
  for (const json& e : edges_j) {
    if (!e.is_array() || e.size() != 2) {
      throw Error("schema", "each edge must be a pair of vertices");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph(v, std::move(edges));
}

Matroid matroid_from_json(const json& j) {
  std::string kind = require_field(j, "kind").get<std::string>();
  if (kind == "uniform") {
    return Matroid::uniform(int_field(j, "n"), int_field(j, "r"));
  }
  if (kind == "bases") {
    int n = int_field(j, "n");
    const json& bases_j = require_field(j, "bases");
    std::vector<Subset> bases;
    for (const json& b : bases_j) {
      bases.push_back(subset_of(b.get<std::vector<int>>(), n));
    }
    return Matroid::from_bases(n, std::move(bases));
  }
  if (kind == "graph") {
    return Matroid::cycle_matroid(graph_from_json(j));
  }
  if (kind == "linear") {
    long p = require_field(j, "p").get<long>();
    const json& rows_j = require_field(j, "matrix");
    std::vector<std::vector<long>> rows;
    for (const json& r : rows_j) rows.push_back(r.get<std::vector<long>>());
    return Matroid::linear(p, std::move(rows));
  }
  if (kind == "dual") {
    return matroid_from_json(require_field(j, "of")).dual();
  }
  throw Error("schema", "unknown matroid kind '" + kind + "'");
}

RotationSystem rotation_from_json(const json& j, const Graph& g) {
  int v = int_field(j, "vertices");
  const json& rot_j = require_field(j, "rotations");
  if (!rot_j.is_array() || static_cast<int>(rot_j.size()) != v) {
    throw Error("schema", "rotations must list every vertex");
  }
  std::vector<std::vector<Dart>> at;
  at.reserve(v);
  for (const json& darts_j : rot_j) {
    std::vector<Dart> darts;
    for (const json& d : darts_j) {
      if (!d.is_array() || d.size() != 2) {
        throw Error("schema", "edge-end must be [edge, end]");
      }
      darts.push_back(Dart{d[0].get<int>(), d[1].get<int>()});
    }
    at.push_back(std::move(darts));
  }
  RotationSystem rot(std::move(at));
  rot.validate_against(g);
  return rot;
}

MatroidMorphism morphism_from_json(const json& j) {
  Matroid source = matroid_from_json(require_field(j, "source"));
  Matroid target = matroid_from_json(require_field(j, "target"));
  std::vector<int> targets =
      require_field(j, "map").get<std::vector<int>>();
  GroundMap map(source.size(), target.size(), std::move(targets));
  return MatroidMorphism(std::move(source), std::move(target), std::move(map));
}

FlagMatroid flag_from_json(const json& j) {
  const json& parts = require_field(j, "constituents");
  std::vector<Matroid> constituents;
  for (const json& p : parts) constituents.push_back(matroid_from_json(p));
  return FlagMatroid(std::move(constituents));
}

SetFunction setfunction_from_json(const json& j) {
  int n = int_field(j, "n");
  const json& values_j = require_field(j, "values");
  std::vector<Rat> values;
  values.reserve(values_j.size());
  for (const json& v : values_j) values.push_back(rational_from_json(v));
  return SetFunction(n, std::move(values));
}

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  // std::map keys iterate in exponent-lex order, the canonical order
  for (const auto& [e, c] : p.terms()) {
    json t = rational_to_json(c);
    t["exps"] = e;
    terms.push_back(std::move(t));
  }
  return {{"vars", p.var_count()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
  Polynomial p(int_field(j, "vars"));
  for (const json& t : require_field(j, "terms")) {
    p.add_term(require_field(t, "exps").get<std::vector<int>>(),
               rational_from_json(t));
  }
  return p;
}

json trivariate_to_json(const TrivariatePolynomial& t) {
  json terms = json::array();
  for (const auto& [e, c] : t.terms) {
    json term = rational_to_json(c);
    term["exps"] = {e[0], e[1], e[2]};
    terms.push_back(std::move(term));
  }
  return {{"vars", json::array({"x", "y", "z"})}, {"terms", std::move(terms)}};
}

json morphism_verdict_to_json(const MorphismVerdict& v) {
  if (v.ok) return {{"ok", true}};
  return {{"ok", false},
          {"condition", v.condition},
          {"witness", {{"s1", subset_to_json(v.s1)}, {"s2", subset_to_json(v.s2)}}}};
}

json delta_verdict_to_json(const DeltaMatroidVerdict& v) {
  if (v.ok) return {{"ok", true}};
  json witness = {{"s1", subset_to_json(v.s1)}, {"s2", subset_to_json(v.s2)}};
  if (v.property == 1) {
    witness["s3"] = subset_to_json(v.s3);
  } else {
    witness["i"] = v.element;
  }
  return {{"ok", false}, {"property", v.property}, {"witness", witness}};
}

json lorentzian_verdict_to_json(const LorentzianVerdict& v) {
  if (v.ok) return {{"ok", true}};
  json out = {{"ok", false}, {"clause", v.clause}};
  if (std::string(v.clause) == "negative-coefficient") {
    out["monomial"] = v.monomial;
  } else if (v.mconvex) {
    out["witness"] = {{"alpha", v.mconvex->alpha},
                      {"beta", v.mconvex->beta},
                      {"var", v.mconvex->var}};
  } else if (std::string(v.clause) == "quadratic-signature") {
    out["derivative_multiset"] = v.derivative_multiset;
    out["positive_eigenvalues"] = v.positive_count;
  }
  return out;
}

json ulc_verdict_to_json(const UlcVerdict& v) {
  if (v.ok) return {{"ok", true}};
  return {{"ok", false}, {"index", v.index}, {"reason", v.reason}};
}

json rank_axiom_report_to_json(const RankAxiomReport& r) {
  json out = {{"ok", r.ok()},
              {"unit_bound_ok", r.unit_bound_ok},
              {"monotone_ok", r.monotone_ok},
              {"submodular_ok", r.submodular_ok}};
  if (!r.unit_bound_ok) out["unit_bound_witness"] = subset_to_json(r.unit_bound_witness);
  if (!r.monotone_ok) {
    out["monotone_witness"] = {{"s", subset_to_json(r.monotone_witness)},
                               {"i", r.monotone_element}};
  }
  if (!r.submodular_ok) {
    out["submodular_witness"] = {{"s1", subset_to_json(r.submodular_s1)},
                                 {"s2", subset_to_json(r.submodular_s2)}};
  }
  return out;
}

json ln_report_to_json(const LnProbeReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"p", rational_to_json(e.p)},
                       {"verdict", lorentzian_verdict_to_json(e.verdict)}});
  }
  json out = {{"conclusion", r.conclusion()}, {"entries", std::move(entries)}};
  if (r.witness_p) out["witness_p"] = rational_to_json(*r.witness_p);
  return out;
}

json mnat_verdict_to_json(const MnatVerdict& v) {
  if (v.ok) return {{"ok", true}};
  json witness = {{"s", subset_to_json(v.s)}, {"i", v.i}, {"j", v.j}};
  if (v.condition == 2) witness["k"] = v.k;
  return {{"ok", false}, {"condition", v.condition}, {"witness", witness}};
}

json submodular_verdict_to_json(const SubmodularVerdict& v) {
  if (v.ok) return {{"ok", true}};
  return {{"ok", false},
          {"witness", {{"s1", subset_to_json(v.s1)}, {"s2", subset_to_json(v.s2)}}}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("schema", "malformed JSON in '" + path + "': " + e.what());
  }
}

void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write '" + path + "'");
  out << canonical_dump(j);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = fnv1a(bytes);
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
  return os.str();
}

}  // namespace matmor::io
