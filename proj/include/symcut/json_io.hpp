#pragma once

// JSON serialization for the exact and numerical layers.
//
// Conventions (also documented in the README):
//   * exact rationals travel as strings "p" or "p/q" in lowest terms; plain
//     JSON integers are accepted on input for convenience;
//   * objects reject unknown keys so schema typos fail loudly;
//   * output uses insertion-ordered objects with a fixed key order, so a
//     given value always serializes to the same bytes;
//   * parse errors carry a 1-based line/column diagnostic.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcut/coxvinberg.hpp"
#include "symcut/polyhedra.hpp"
#include "symcut/verify.hpp"

namespace symcut {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// parsing with diagnostics
// ---------------------------------------------------------------------------

struct JsonParseError : std::runtime_error {
  JsonParseError(const std::string& what, std::size_t line_, std::size_t column_)
      : std::runtime_error(what), line(line_), column(column_) {}
  std::size_t line;
  std::size_t column;
};

// Parse a JSON document; on failure rethrow with line/column computed from
// the byte offset the parser reports.
inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    if (offset > text.size()) offset = text.size();
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << "JSON parse error at line " << line << ", column " << column << ": "
        << e.what();
    throw JsonParseError(msg.str(), line, column);
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

// ---------------------------------------------------------------------------
// schema helpers
// ---------------------------------------------------------------------------

namespace detail {

inline void require_object(const Json& j, const char* context) {
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(context) + ": expected an object");
  }
}

// every present key must be listed; every key in `required` must be present
inline void check_keys(const Json& j, const char* context,
                       std::initializer_list<const char*> required,
                       std::initializer_list<const char*> optional = {}) {
  require_object(j, context);
  for (const char* key : required) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string(context) + ": missing key \"" +
                                  key + "\"");
    }
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : required) known = known || item.key() == key;
    for (const char* key : optional) known = known || item.key() == key;
    if (!known) {
      throw std::invalid_argument(std::string(context) + ": unknown key \"" +
                                  item.key() + "\"");
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// rationals and vectors
// ---------------------------------------------------------------------------

inline Json rat_to_json(const Rat& q) { return rat_to_string(q); }

inline Rat rat_from_json(const Json& j, const char* context = "rational") {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw std::invalid_argument(std::string(context) +
                              ": expected \"p/q\" string or integer");
}

inline Json ratvec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rat_to_json(x));
  return out;
}

inline RatVec ratvec_from_json(const Json& j, const char* context = "vector") {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(context) + ": expected an array");
  }
  RatVec out;
  for (const auto& x : j) out.push_back(rat_from_json(x, context));
  return out;
}

inline Json intvec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline IntVec intvec_from_json(const Json& j, const char* context = "vector") {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(context) + ": expected an array");
  }
  IntVec out;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      out.push_back(Int(x.get<long long>()));
    } else if (x.is_string()) {
      Rat q = rat_from_string(x.get<std::string>());
      if (den(q) != 1) {
        throw std::invalid_argument(std::string(context) +
                                    ": expected an integer entry");
      }
      out.push_back(num(q));
    } else {
      throw std::invalid_argument(std::string(context) +
                                  ": expected an integer entry");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// labeled polyhedra
// ---------------------------------------------------------------------------

inline Json polyhedron_to_json(const LabeledPolyhedron& p) {
  Json out;
  out["root_datum"] = p.datum.name;
  out["ambient"] = (p.ambient == Ambient::Chamber) ? "chamber" : "full";
  if (p.empty_marker) {
    out["empty"] = true;
    return out;
  }
  Json facets = Json::array();
  for (const auto& f : p.facets) {
    Json row;
    row["beta"] = intvec_to_json(f.beta);
    row["xi"] = rat_to_json(f.xi);
    row["label"] = f.label.str();
    facets.push_back(std::move(row));
  }
  out["facets"] = std::move(facets);
  return out;
}

inline LabeledPolyhedron polyhedron_from_json(const Json& j) {
  detail::check_keys(j, "polyhedron", {"root_datum", "ambient"},
                     {"facets", "empty"});
  if (!j["root_datum"].is_string()) {
    throw std::invalid_argument("polyhedron: \"root_datum\" must be a string");
  }
  RootDatum rd = build_root_datum(j["root_datum"].get<std::string>());
  std::string amb = j["ambient"].is_string() ? j["ambient"].get<std::string>()
                                             : std::string();
  Ambient ambient;
  if (amb == "chamber") {
    ambient = Ambient::Chamber;
  } else if (amb == "full") {
    ambient = Ambient::Full;
  } else {
    throw std::invalid_argument(
        "polyhedron: \"ambient\" must be \"chamber\" or \"full\"");
  }
  if (j.contains("empty") && j["empty"].is_boolean() && j["empty"].get<bool>()) {
    return empty_polyhedron(rd, ambient);
  }
  if (!j.contains("facets") || !j["facets"].is_array()) {
    throw std::invalid_argument("polyhedron: missing \"facets\" array");
  }
  std::vector<LabeledFacet> facets;
  for (const auto& row : j["facets"]) {
    detail::check_keys(row, "facet", {"beta", "xi"}, {"label"});
    LabeledFacet f;
    f.beta = intvec_from_json(row["beta"], "facet beta");
    f.xi = rat_from_json(row["xi"], "facet xi");
    if (row.contains("label")) {
      IntVec one = intvec_from_json(Json::array({row["label"]}), "facet label");
      f.label = one[0];
    } else {
      f.label = 1;
    }
    facets.push_back(std::move(f));
  }
  return make_polyhedron(rd, ambient, std::move(facets));
}

// ---------------------------------------------------------------------------
// linear systems (used by strata and slice outputs)
// ---------------------------------------------------------------------------

inline Json linear_system_to_json(const LinearSystem& sys) {
  Json out;
  out["nvars"] = sys.nvars;
  Json rows = Json::array();
  for (const auto& r : sys.rows) {
    Json row;
    row["normal"] = ratvec_to_json(r.a);
    row["rhs"] = rat_to_json(r.b);
    row["rel"] = (r.rel == Rel::Le) ? "le" : (r.rel == Rel::Lt) ? "lt" : "eq";
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

inline LinearSystem linear_system_from_json(const Json& j) {
  detail::check_keys(j, "linear system", {"nvars", "rows"});
  if (!j["nvars"].is_number_unsigned() && !j["nvars"].is_number_integer()) {
    throw std::invalid_argument("linear system: \"nvars\" must be an integer");
  }
  LinearSystem sys(j["nvars"].get<std::size_t>());
  if (!j["rows"].is_array()) {
    throw std::invalid_argument("linear system: \"rows\" must be an array");
  }
  for (const auto& row : j["rows"]) {
    detail::check_keys(row, "linear system row", {"normal", "rhs"}, {"rel"});
    RatVec a = ratvec_from_json(row["normal"], "row normal");
    Rat b = rat_from_json(row["rhs"], "row rhs");
    Rel rel = Rel::Le;
    if (row.contains("rel")) {
      std::string s = row["rel"].is_string() ? row["rel"].get<std::string>()
                                             : std::string();
      if (s == "le") {
        rel = Rel::Le;
      } else if (s == "lt") {
        rel = Rel::Lt;
      } else if (s == "eq") {
        rel = Rel::Eq;
      } else {
        throw std::invalid_argument(
            "linear system row: \"rel\" must be \"le\", \"lt\", or \"eq\"");
      }
    }
    sys.add(std::move(a), std::move(b), rel);
  }
  return sys;
}

// ---------------------------------------------------------------------------
// cones, fans, lattice data, reports (output schemas)
// ---------------------------------------------------------------------------

inline Json cone_to_json(const RationalCone& c) {
  Json out;
  out["dim"] = c.dim();
  Json h = Json::array();
  for (const auto& a : c.inequalities()) h.push_back(ratvec_to_json(a));
  Json eqs = Json::array();
  for (const auto& a : c.equalities()) eqs.push_back(ratvec_to_json(a));
  Json rays = Json::array();
  for (const auto& r : c.rays()) rays.push_back(ratvec_to_json(r));
  Json lines = Json::array();
  for (const auto& l : c.lines()) lines.push_back(ratvec_to_json(l));
  out["inequalities"] = std::move(h);
  out["equalities"] = std::move(eqs);
  out["rays"] = std::move(rays);
  out["lines"] = std::move(lines);
  return out;
}

inline Json stacky_fan_to_json(const StackyFan& fan) {
  Json out;
  Json rays = Json::array();
  for (const auto& r : fan.rays) {
    Json ray;
    ray["generator"] = intvec_to_json(r.generator);
    ray["multiplicity"] = r.multiplicity.str();
    rays.push_back(std::move(ray));
  }
  Json cones = Json::array();
  for (const auto& c : fan.cones) {
    Json cone = Json::array();
    for (std::size_t i : c) cone.push_back(i);
    cones.push_back(std::move(cone));
  }
  out["rays"] = std::move(rays);
  out["cones"] = std::move(cones);
  return out;
}

inline Json delzant_sequence_to_json(const DelzantSequence& seq) {
  Json out;
  Json mat = Json::array();
  for (const auto& row : seq.map.matrix) mat.push_back(intvec_to_json(row));
  out["matrix"] = std::move(mat);
  Json kernel = Json::array();
  for (const auto& k : seq.kernel_basis) kernel.push_back(intvec_to_json(k));
  out["kernel_basis"] = std::move(kernel);
  out["exact_on_right"] = seq.exact_on_right;
  Json inv = Json::array();
  for (const auto& d : seq.cokernel_invariants) inv.push_back(d.str());
  out["cokernel_invariants"] = std::move(inv);
  out["cokernel_free_rank"] = seq.cokernel_free_rank;
  return out;
}

inline Json report_to_json(const VerifyReport& r) {
  Json out;
  out["suite"] = r.suite;
  out["seed"] = r.seed;
  out["trials"] = r.trials;
  out["max_residual"] = r.max_residual;
  out["pass"] = r.pass;
  if (r.suite == "sl2_hamiltonian") {
    out["hamiltonian_constant"] = r.hamiltonian_constant;
    out["deviation_from_half"] = r.deviation_from_half;
  }
  return out;
}

// canonical dump: two-space indent and a trailing newline
inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace symcut
