#ifndef NCC_CLI_HPP
#define NCC_CLI_HPP

// Problem files, reports and the `ncc` command line.
//
// A problem file is one JSON document:
//
//   {
//     "field": "Q" | {"Fp": 5},
//     "algebra": {"dim": 3, "structure_constants": [[i, j, k, c], ...],
//                 "unit": [1, 1, 1], "labels": ["e1", "e2", "e3"]},
//     "ideals": {"I1": [[0, 0, 1]], ...},          // generators, dense coordinates
//     "covering": ["I1", "I2"],
//     "functor": {"kind": "ringed_default"}
//              | {"kind": "constant", "N": 3, "ring": <algebra>}
//              | {"kind": "cover", "N": 3, "overlaps": [[1, 2], [2, 3]]}
//              | {"kind": "explicit", "N": 2,
//                 "rings": [{"tuple": [1], "algebra": <algebra>}, ...],
//                 "restrictions": [{"from": [1], "add": 2, "matrix": [[1]]}, ...]},
//     "options": {"n_max": 2, "dim_cap": 20000}
//   }
//
// Structure constant indices are 0-based (b_i b_j has coefficient c on b_k);
// covering indices in tuples are 1-based. Coefficients are integers or "p/q".

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncc/oracle.hpp"

namespace ncc::cli {

using json = nlohmann::json;

inline constexpr const char* version = "0.1.0";

enum ExitCode : int { ok = 0, violation = 1, input_error = 2, resource_cap = 3 };

struct FieldSpec {
  std::uint32_t p = 0;  // 0 for Q
  std::string name() const { return p ? "F" + std::to_string(p) : "Q"; }
  bool operator==(const FieldSpec&) const = default;
};

struct AlgebraSpec {
  struct Triple {
    std::size_t i = 0, j = 0, k = 0;
    std::string coeff;
    bool operator==(const Triple&) const = default;
  };
  std::size_t dim = 0;
  std::vector<Triple> structure_constants;
  std::vector<std::string> unit;
  std::vector<std::string> labels;
  bool operator==(const AlgebraSpec&) const = default;
};

enum class FunctorKind { none, ringed_default, constant, cover, explicit_rings };

using Tuple = std::vector<std::size_t>;  // 1-based, increasing
using CoeffMatrix = std::vector<std::vector<std::string>>;

struct FunctorSpec {
  struct Ring {
    Tuple tuple;
    AlgebraSpec algebra;
    bool operator==(const Ring&) const = default;
  };
  struct Restriction {
    Tuple from;
    std::size_t add = 0;
    CoeffMatrix matrix;
    bool operator==(const Restriction&) const = default;
  };
  FunctorKind kind = FunctorKind::none;
  std::size_t N = 0;
  std::optional<AlgebraSpec> ring;  // constant
  std::vector<Tuple> overlaps;      // cover
  std::vector<Ring> rings;          // explicit
  std::vector<Restriction> restrictions;
  bool operator==(const FunctorSpec&) const = default;
};

struct ProblemFile {
  FieldSpec field;
  std::optional<AlgebraSpec> algebra;
  std::map<std::string, CoeffMatrix> ideals;
  std::vector<std::string> covering;
  FunctorSpec functor;
  std::size_t n_max = 2;
  std::size_t dim_cap = 20000;
  bool operator==(const ProblemFile&) const = default;
};

// ---------------------------------------------------------------- parsing

namespace detail {

inline void require_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw InputError(where, "unknown key '" + key + "'");
  }
}

inline const json& member(const json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where, std::string("missing '") + key + "'");
  return *it;
}

inline std::size_t index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected an array");
  return j;
}

/// Canonical rational string of an integer or "p/q" entry.
inline std::string coeff(const json& j, const std::string& where) {
  std::string s;
  if (j.is_number_integer()) s = std::to_string(j.get<long long>());
  else if (j.is_string()) s = j.get<std::string>();
  else throw InputError(where, "expected an integer or a \"p/q\" string");
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InputError(where, "not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw InputError(where, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q.get_str();
}

inline json coeff_json(const std::string& s) {
  mpq_class q(s, 10);
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s;
}

inline std::vector<std::string> coeff_vector(const json& j, const std::string& where) {
  std::vector<std::string> out;
  for (std::size_t n = 0; n < array(j, where).size(); ++n)
    out.push_back(coeff(j[n], where + "[" + std::to_string(n) + "]"));
  return out;
}

inline FieldSpec parse_field(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return {};
    throw InputError(where, "field must be \"Q\" or {\"Fp\": p}");
  }
  require_keys(j, where, {"Fp"});
  auto p = index(member(j, where, "Fp"), where + ".Fp");
  try {
    PrimeField check(p);
  } catch (const Error& e) {
    throw InputError(where, e.what());
  }
  return {static_cast<std::uint32_t>(p)};
}

inline AlgebraSpec parse_algebra(const json& j, const std::string& where) {
  require_keys(j, where, {"dim", "structure_constants", "unit", "labels"});
  AlgebraSpec a;
  a.dim = index(member(j, where, "dim"), where + ".dim");
  const auto& sc = array(member(j, where, "structure_constants"), where + ".structure_constants");
  for (std::size_t n = 0; n < sc.size(); ++n) {
    const std::string w = where + ".structure_constants[" + std::to_string(n) + "]";
    if (!sc[n].is_array() || sc[n].size() != 4) throw InputError(w, "expected [i, j, k, coeff]");
    AlgebraSpec::Triple t{index(sc[n][0], w), index(sc[n][1], w), index(sc[n][2], w), coeff(sc[n][3], w)};
    if (t.i >= a.dim || t.j >= a.dim || t.k >= a.dim) throw InputError(w, "basis index out of range for dim " +
                                                                              std::to_string(a.dim));
    a.structure_constants.push_back(std::move(t));
  }
  a.unit = coeff_vector(member(j, where, "unit"), where + ".unit");
  if (a.unit.size() != a.dim) throw InputError(where + ".unit", "length differs from dim");
  if (j.contains("labels")) {
    for (const auto& l : array(j["labels"], where + ".labels")) {
      if (!l.is_string()) throw InputError(where + ".labels", "labels must be strings");
      a.labels.push_back(l.get<std::string>());
    }
    if (a.labels.size() != a.dim) throw InputError(where + ".labels", "label count differs from dim");
  }
  return a;
}

inline Tuple parse_tuple(const json& j, const std::string& where, std::size_t N) {
  Tuple t;
  for (const auto& e : array(j, where)) {
    auto i = index(e, where);
    if (i < 1 || i > N) throw InputError(where, "index " + std::to_string(i) + " outside 1.." + std::to_string(N));
    if (!t.empty() && i <= t.back()) throw InputError(where, "tuple must be strictly increasing");
    t.push_back(i);
  }
  return t;
}

inline FunctorSpec parse_functor(const json& j, const std::string& where) {
  FunctorSpec f;
  const auto& kind = member(j, where, "kind");
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  auto read_n = [&] {
    f.N = index(member(j, where, "N"), where + ".N");
    if (f.N < 1 || f.N > 16) throw InputError(where + ".N", "N must be between 1 and 16");
  };
  if (k == "ringed_default") {
    require_keys(j, where, {"kind"});
    f.kind = FunctorKind::ringed_default;
  } else if (k == "constant") {
    require_keys(j, where, {"kind", "N", "ring"});
    f.kind = FunctorKind::constant;
    read_n();
    if (j.contains("ring")) f.ring = parse_algebra(j["ring"], where + ".ring");
  } else if (k == "cover") {
    require_keys(j, where, {"kind", "N", "overlaps"});
    f.kind = FunctorKind::cover;
    read_n();
    const auto& ov = array(member(j, where, "overlaps"), where + ".overlaps");
    for (std::size_t n = 0; n < ov.size(); ++n) {
      auto t = parse_tuple(ov[n], where + ".overlaps[" + std::to_string(n) + "]", f.N);
      if (t.empty()) throw InputError(where + ".overlaps[" + std::to_string(n) + "]", "empty tuple");
      f.overlaps.push_back(std::move(t));
    }
  } else if (k == "explicit") {
    require_keys(j, where, {"kind", "N", "rings", "restrictions"});
    f.kind = FunctorKind::explicit_rings;
    read_n();
    const auto& rings = array(member(j, where, "rings"), where + ".rings");
    for (std::size_t n = 0; n < rings.size(); ++n) {
      const std::string w = where + ".rings[" + std::to_string(n) + "]";
      require_keys(rings[n], w, {"tuple", "algebra"});
      f.rings.push_back({parse_tuple(member(rings[n], w, "tuple"), w + ".tuple", f.N),
                         parse_algebra(member(rings[n], w, "algebra"), w + ".algebra")});
    }
    const auto& res = array(member(j, where, "restrictions"), where + ".restrictions");
    for (std::size_t n = 0; n < res.size(); ++n) {
      const std::string w = where + ".restrictions[" + std::to_string(n) + "]";
      require_keys(res[n], w, {"from", "add", "matrix"});
      FunctorSpec::Restriction r;
      r.from = parse_tuple(member(res[n], w, "from"), w + ".from", f.N);
      r.add = index(member(res[n], w, "add"), w + ".add");
      if (r.add < 1 || r.add > f.N) throw InputError(w + ".add", "index outside 1.." + std::to_string(f.N));
      const auto& m = array(member(res[n], w, "matrix"), w + ".matrix");
      for (std::size_t row = 0; row < m.size(); ++row)
        r.matrix.push_back(coeff_vector(m[row], w + ".matrix[" + std::to_string(row) + "]"));
      f.restrictions.push_back(std::move(r));
    }
  } else {
    throw InputError(where + ".kind", "expected ringed_default, constant, cover or explicit");
  }
  return f;
}

inline json tuple_json(const Tuple& t) { return json(t); }

inline json algebra_json(const AlgebraSpec& a) {
  json sc = json::array();
  for (const auto& t : a.structure_constants) sc.push_back({t.i, t.j, t.k, coeff_json(t.coeff)});
  json unit = json::array();
  for (const auto& u : a.unit) unit.push_back(coeff_json(u));
  json out = {{"dim", a.dim}, {"structure_constants", sc}, {"unit", unit}};
  if (!a.labels.empty()) out["labels"] = a.labels;
  return out;
}

inline json matrix_json(const CoeffMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& c : row) r.push_back(coeff_json(c));
    out.push_back(r);
  }
  return out;
}

}  // namespace detail

/// Throws InputError with a JSON path for anything outside the schema.
inline ProblemFile parse_problem(const json& j) {
  using namespace detail;
  require_keys(j, "problem", {"field", "algebra", "ideals", "covering", "functor", "options"});
  ProblemFile p;
  if (j.contains("field")) p.field = parse_field(j["field"], "field");
  if (j.contains("algebra")) p.algebra = parse_algebra(j["algebra"], "algebra");
  if (j.contains("ideals")) {
    if (!j["ideals"].is_object()) throw InputError("ideals", "expected an object of named generator lists");
    if (!p.algebra) throw InputError("ideals", "ideals need an algebra");
    for (const auto& [name, gens] : j["ideals"].items()) {
      const std::string w = "ideals." + name;
      CoeffMatrix g;
      for (std::size_t n = 0; n < array(gens, w).size(); ++n) {
        g.push_back(coeff_vector(gens[n], w + "[" + std::to_string(n) + "]"));
        if (g.back().size() != p.algebra->dim)
          throw InputError(w + "[" + std::to_string(n) + "]", "generator length differs from algebra dim");
      }
      p.ideals.emplace(name, std::move(g));
    }
  }
  if (j.contains("covering")) {
    const auto& cov = array(j["covering"], "covering");
    if (cov.empty()) throw InputError("covering", "a covering needs at least one ideal");
    for (std::size_t n = 0; n < cov.size(); ++n) {
      const std::string w = "covering[" + std::to_string(n) + "]";
      if (!cov[n].is_string()) throw InputError(w, "expected an ideal name");
      auto name = cov[n].get<std::string>();
      if (!p.ideals.count(name)) throw InputError(w, "unknown ideal '" + name + "'");
      p.covering.push_back(name);
    }
  }
  if (j.contains("functor")) p.functor = parse_functor(j["functor"], "functor");
  if (p.functor.kind == FunctorKind::ringed_default && p.covering.empty())
    throw InputError("functor", "ringed_default needs an algebra and a covering");
  if (j.contains("options")) {
    const auto& o = j["options"];
    require_keys(o, "options", {"n_max", "dim_cap"});
    if (o.contains("n_max")) p.n_max = index(o["n_max"], "options.n_max");
    if (o.contains("dim_cap")) p.dim_cap = index(o["dim_cap"], "options.dim_cap");
  }
  if (p.n_max < 1) throw InputError("options.n_max", "n_max must be at least 1");
  return p;
}

inline ProblemFile parse_problem_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("json", e.what());
  }
  return parse_problem(j);
}

/// Canonical form: integers where possible, reduced fractions otherwise, all
/// defaults spelled out. parse_problem(to_json(p)) == p.
inline json to_json(const ProblemFile& p) {
  using namespace detail;
  json out;
  out["field"] = p.field.p ? json{{"Fp", p.field.p}} : json("Q");
  if (p.algebra) out["algebra"] = algebra_json(*p.algebra);
  if (!p.ideals.empty()) {
    json ideals = json::object();
    for (const auto& [name, gens] : p.ideals) ideals[name] = matrix_json(gens);
    out["ideals"] = ideals;
  }
  if (!p.covering.empty()) out["covering"] = p.covering;
  const auto& f = p.functor;
  switch (f.kind) {
    case FunctorKind::none:
      break;
    case FunctorKind::ringed_default:
      out["functor"] = {{"kind", "ringed_default"}};
      break;
    case FunctorKind::constant:
      out["functor"] = {{"kind", "constant"}, {"N", f.N}};
      if (f.ring) out["functor"]["ring"] = algebra_json(*f.ring);
      break;
    case FunctorKind::cover:
      out["functor"] = {{"kind", "cover"}, {"N", f.N}, {"overlaps", f.overlaps}};
      break;
    case FunctorKind::explicit_rings: {
      json rings = json::array(), res = json::array();
      for (const auto& r : f.rings) rings.push_back({{"tuple", r.tuple}, {"algebra", algebra_json(r.algebra)}});
      for (const auto& r : f.restrictions)
        res.push_back({{"from", r.from}, {"add", r.add}, {"matrix", matrix_json(r.matrix)}});
      out["functor"] = {{"kind", "explicit"}, {"N", f.N}, {"rings", rings}, {"restrictions", res}};
      break;
    }
  }
  out["options"] = {{"n_max", p.n_max}, {"dim_cap", p.dim_cap}};
  return out;
}

inline std::string fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// "Q", "F5", "Fp:5" or "5".
inline FieldSpec parse_field_override(const std::string& s) {
  if (s == "Q") return {};
  std::string digits = s;
  if (digits.rfind("Fp:", 0) == 0) digits = digits.substr(3);
  else if (!digits.empty() && digits[0] == 'F') digits = digits.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
    throw InputError("--field-override", "expected Q or F<p>, got '" + s + "'");
  return detail::parse_field(json{{"Fp", std::stoull(digits)}}, "--field-override");
}

// ---------------------------------------------------------------- instances

template <Field K>
struct Instance {
  K k;
  AlgebraPtr<K> algebra;
  std::optional<Covering<K>> covering;
  std::optional<RingedStructure<K>> ringed;
  std::optional<CoverDescription> cover;
  std::optional<PosetFunctor<K>> functor;
  std::string functor_failure;  // set when the functor section violates an axiom
};

namespace detail {

template <Field K>
typename K::element element(const K& k, const std::string& s, const std::string& where) {
  try {
    return k.from_string(s);
  } catch (const Error& e) {
    throw InputError(where, e.what());
  }
}

template <Field K>
AlgebraPtr<K> build_algebra(const K& k, const AlgebraSpec& a, const std::string& where) {
  std::vector<StructureConstant<K>> sc;
  for (std::size_t n = 0; n < a.structure_constants.size(); ++n) {
    const auto& t = a.structure_constants[n];
    sc.push_back({t.i, t.j, t.k, element(k, t.coeff, where + ".structure_constants[" + std::to_string(n) + "]")});
  }
  Vec<K> unit;
  for (const auto& u : a.unit) unit.push_back(element(k, u, where + ".unit"));
  try {
    return make_algebra(k, a.dim, sc, unit, a.labels);
  } catch (const AxiomViolation& e) {
    throw InputError(where, std::string("structure constants violate ") + e.axiom() + " (" + e.witness() + ")");
  } catch (const Error& e) {
    throw InputError(where, e.what());
  }
}

inline IndexMask mask_of(const Tuple& t) {
  IndexMask m = 0;
  for (auto i : t) m |= IndexMask{1} << (i - 1);
  return m;
}

template <Field K>
PosetFunctor<K> build_explicit(const K& k, const FunctorSpec& f) {
  std::vector<AlgebraPtr<K>> rings(std::size_t{1} << f.N);
  for (std::size_t n = 0; n < f.rings.size(); ++n) {
    const std::string w = "functor.rings[" + std::to_string(n) + "]";
    auto m = mask_of(f.rings[n].tuple);
    if (rings[m]) throw InputError(w, "tuple " + format_tuple(m) + " listed twice");
    rings[m] = build_algebra(k, f.rings[n].algebra, w + ".algebra");
  }
  for (IndexMask m = 0; m < rings.size(); ++m)
    if (!rings[m]) throw InputError("functor.rings", "no ring for tuple " + format_tuple(m));
  std::map<typename PosetFunctor<K>::RestrictionKey, Matrix<K>> res;
  for (std::size_t n = 0; n < f.restrictions.size(); ++n) {
    const auto& r = f.restrictions[n];
    const std::string w = "functor.restrictions[" + std::to_string(n) + "]";
    auto from = mask_of(r.from);
    const std::size_t i = r.add - 1;
    if (from & (IndexMask{1} << i)) throw InputError(w, "added index already in the tuple");
    const auto& src = rings[from];
    const auto& dst = rings[from | (IndexMask{1} << i)];
    if (r.matrix.size() != dst->dim()) throw InputError(w + ".matrix", "row count differs from target ring dim");
    Matrix<K> m(k, dst->dim(), src->dim());
    for (std::size_t row = 0; row < r.matrix.size(); ++row) {
      if (r.matrix[row].size() != src->dim()) throw InputError(w + ".matrix", "column count differs from source dim");
      for (std::size_t col = 0; col < src->dim(); ++col) m(row, col) = element(k, r.matrix[row][col], w + ".matrix");
    }
    if (!res.emplace(std::make_pair(from, i), std::move(m)).second) throw InputError(w, "restriction listed twice");
  }
  try {
    return PosetFunctor<K>::make(f.N, std::move(rings), res);
  } catch (const AxiomViolation&) {
    throw;
  } catch (const Error& e) {
    throw InputError("functor.restrictions", e.what());
  }
}

}  // namespace detail

/// Input problems raise InputError; a functor violating its axioms is recorded in
/// functor_failure so that it can be reported as a property violation.
template <Field K>
Instance<K> build_instance(const K& k, const ProblemFile& p) {
  using detail::element;
  Instance<K> inst{k, nullptr, {}, {}, {}, {}, {}};
  if (p.algebra) inst.algebra = detail::build_algebra(k, *p.algebra, "algebra");
  if (!p.covering.empty()) {
    std::vector<Ideal<K>> ideals;
    for (std::size_t n = 0; n < p.covering.size(); ++n) {
      const auto& name = p.covering[n];
      std::vector<Vec<K>> gens;
      for (const auto& g : p.ideals.at(name)) {
        Vec<K> v;
        for (const auto& c : g) v.push_back(element(k, c, "ideals." + name));
        gens.push_back(std::move(v));
      }
      ideals.push_back(ideal_closure(inst.algebra, gens));
    }
    try {
      inst.covering.emplace(inst.algebra, std::move(ideals));
    } catch (const Error& e) {
      throw InputError("covering", e.what());
    }
  }
  const auto& f = p.functor;
  try {
    switch (f.kind) {
      case FunctorKind::none:
      case FunctorKind::ringed_default:
        if (inst.covering) {
          inst.ringed.emplace(default_ringed(inst.algebra));
          inst.functor.emplace(functor_from_ringed_covering(*inst.covering, *inst.ringed));
        }
        break;
      case FunctorKind::constant: {
        auto ring = f.ring ? detail::build_algebra(k, *f.ring, "functor.ring")
                           : make_algebra(k, 1, std::vector<StructureConstant<K>>{{0, 0, 0, k.one()}}, Vec<K>{k.one()},
                                          {"1"});
        inst.functor.emplace(constant_functor(f.N, ring));
        break;
      }
      case FunctorKind::cover: {
        std::vector<IndexMask> faces;
        for (const auto& t : f.overlaps) faces.push_back(detail::mask_of(t));
        try {
          inst.cover = cover_from_faces(f.N, faces);
        } catch (const InputError& e) {
          throw InputError("functor.overlaps", e.what());
        }
        inst.functor.emplace(functor_from_cover(k, *inst.cover));
        break;
      }
      case FunctorKind::explicit_rings:
        inst.functor.emplace(detail::build_explicit(k, f));
        break;
    }
  } catch (const AxiomViolation& e) {
    inst.functor_failure = std::string(e.what());
  }
  return inst;
}

// ---------------------------------------------------------------- commands

enum class Command { check, cech, amitsur, verify, oracle };

inline std::string command_name(Command c) {
  switch (c) {
    case Command::check: return "check";
    case Command::cech: return "cech";
    case Command::amitsur: return "amitsur";
    case Command::verify: return "verify";
    case Command::oracle: return "oracle";
  }
  return "?";
}

struct Outcome {
  json report;
  int exit_code = ExitCode::ok;
};

namespace detail {

inline json property(bool pass, const std::string& witness = "") {
  json j = {{"status", pass ? "pass" : "fail"}};
  if (!pass && !witness.empty()) j["witness"] = witness;
  return j;
}

inline json skipped(const std::string& why) { return {{"status", "skipped"}, {"reason", why}}; }

template <Field K>
json covering_json(const Covering<K>& c) {
  auto r = completeness_check(c);
  std::vector<std::size_t> patch_dims, overlap_dims;
  for (std::size_t i = 0; i < c.size(); ++i) patch_dims.push_back(c.patch_dim(i));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) overlap_dims.push_back(c.overlap(i, j)->dim());
  return {{"N", c.size()},
          {"dim_A", c.algebra()->dim()},
          {"dim_B", c.extension_dim()},
          {"patch_dims", patch_dims},
          {"overlap_dims", overlap_dims},
          {"is_covering", r.is_covering},
          {"intersection_dim", r.intersection_dim},
          {"im_pi_dim", r.im_pi_dim},
          {"ker_tau_dim", r.ker_tau_dim},
          {"tau_rank", rank(build_tau(c))},
          {"exact_at_A", r.exact_at_A},
          {"exact_at_B", r.exact_at_B},
          {"complete", r.complete}};
}

template <Field K>
const Covering<K>& need_covering(const Instance<K>& inst, const std::string& cmd) {
  if (!inst.covering) throw InputError("covering", cmd + " needs an algebra and a covering");
  return *inst.covering;
}

template <Field K>
const PosetFunctor<K>* need_functor(const Instance<K>& inst, const std::string& cmd, json& verification) {
  if (!inst.functor_failure.empty()) {
    verification["functor_validation"] = property(false, inst.functor_failure);
    return nullptr;
  }
  if (!inst.functor) throw InputError("functor", cmd + " needs a functor section or a covering");
  verification["functor_validation"] = property(inst.functor->validate().ok);
  return &*inst.functor;
}

struct AmitsurData {
  json results;
  bool d_squared_zero = true;
  std::string witness;
};

template <Field K>
json amitsur_results(const Covering<K>& c, const TensorTower<K>& tower, const AmitsurComplex<K>& cx) {
  std::vector<std::size_t> dims, formula;
  for (std::size_t n = 1; n <= cx.n_max + 1; ++n) {
    dims.push_back(tower.dim(n));
    formula.push_back(static_cast<std::size_t>(block_formula_dim(c, n)));
  }
  return {{"n_max", cx.n_max},
          {"cochain_dims", dims},
          {"block_formula_dims", formula},
          {"augmented", amitsur_homology(cx, true)},
          {"unaugmented", amitsur_homology(cx, false)},
          {"augmentation_kernel_dim", augmentation_kernel_dim(cx)}};
}

template <Field K>
json coring_json(const CoringReport& r) {
  return {{"coassociative", r.coassociative},
          {"left_counit", r.left_counit},
          {"right_counit", r.right_counit},
          {"coproduct_on_e", r.coproduct_on_e},
          {"counit_on_e", r.counit_on_e}};
}

inline bool all_pass(const json& verification) {
  for (const auto& [_, v] : verification.items())
    if (v.at("status") == "fail") return false;
  return true;
}

template <Field K>
void run_check(const Instance<K>& inst, json& results) {
  results["covering"] = covering_json(need_covering(inst, "check"));
}

template <Field K>
void run_cech(const Instance<K>& inst, json& results, json& verification) {
  const auto* f = need_functor(inst, "cech", verification);
  if (!f) return;
  try {
    auto cx = build_cech(*f);
    verification["d_prime_squared_zero"] = property(true);
    std::vector<std::size_t> dims(cx.dims.begin() + 1, cx.dims.end());
    results["cech"] = {{"N", f->size()}, {"cochain_dims", dims}, {"cohomology", cech_cohomology(cx, inst.k)}};
  } catch (const NotAComplex& e) {
    verification["d_prime_squared_zero"] = property(false, e.what());
  }
}

template <Field K>
void run_amitsur(const Instance<K>& inst, const ProblemFile& p, json& results, json& verification) {
  const auto& c = need_covering(inst, "amitsur");
  TensorTower<K> tower(c, std::max<std::size_t>(p.n_max + 2, 4), p.dim_cap);
  try {
    auto cx = build_amitsur(tower, p.n_max);
    verification["d_squared_zero"] = property(true);
    results["amitsur"] = amitsur_results(c, tower, cx);
  } catch (const NotAComplex& e) {
    verification["d_squared_zero"] = property(false, e.what());
  }
  auto coring = check_coring(tower, build_coring(tower));
  results["coring"] = coring_json<K>(coring);
  verification["coring_laws"] = property(coring.ok(), coring.ok() ? "" : "see results.coring");
}

template <Field K>
void run_verify(const Instance<K>& inst, const ProblemFile& p, json& results, json& verification) {
  run_cech(inst, results, verification);
  const std::size_t N = inst.functor ? inst.functor->size() : (inst.covering ? inst.covering->size() : 0);
  bool signs = true;
  for (IndexMask theta = 0; theta < (IndexMask{1} << N); ++theta)
    for (IndexMask zeta = theta;; zeta = (zeta - 1) & theta) {
      if (mask_size(theta & ~zeta) == 2) {
        auto [a, b] = two_path_signs(zeta, theta);
        signs = signs && a + b == 0;
      }
      if (zeta == 0) break;
    }
  verification["two_path_signs"] = property(signs);
  if (!inst.covering) {
    verification["d_squared_zero"] = skipped("no covering");
    verification["chain_map"] = skipped("no covering");
    return;
  }
  const auto& c = *inst.covering;
  results["covering"] = covering_json(c);
  TensorTower<K> tower(c, std::max<std::size_t>(p.n_max + 2, 4), p.dim_cap);
  bool formula = true;
  for (std::size_t n = 1; n <= tower.max_level(); ++n)
    formula = formula && static_cast<double>(tower.dim(n)) == block_formula_dim(c, n);
  verification["block_formula"] = property(formula);
  auto coring = check_coring(tower, build_coring(tower));
  results["coring"] = coring_json<K>(coring);
  verification["coring_laws"] = property(coring.ok(), coring.ok() ? "" : "see results.coring");
  std::optional<AmitsurComplex<K>> am;
  try {
    am.emplace(build_amitsur(tower, p.n_max));
    verification["d_squared_zero"] = property(true);
    results["amitsur"] = amitsur_results(c, tower, *am);
  } catch (const NotAComplex& e) {
    verification["d_squared_zero"] = property(false, e.what());
  }
  if (am && completeness_check(c).complete) {
    auto h = amitsur_homology(*am, true);
    bool acyclic = std::all_of(h.begin(), h.end(), [](std::size_t x) { return x == 0; });
    verification["complete_implies_acyclic"] = property(acyclic, "augmented homology is nonzero");
  } else {
    verification["complete_implies_acyclic"] = skipped("covering is not complete");
  }
  if (!am || !inst.ringed || !inst.functor) {
    verification["chain_map"] = skipped("needs the default ringed functor of the covering");
    return;
  }
  auto cx = build_cech(*inst.functor);
  auto rep = verify_chain_map(*inst.functor, ringed_choice(c, *inst.ringed, *inst.functor), tower, *am, cx, p.n_max);
  json degrees = json::array();
  std::string witness;
  for (const auto& d : rep.degrees) {
    degrees.push_back(d.pass);
    if (!d.pass && witness.empty()) witness = "degree " + std::to_string(d.degree) + " on " + d.counterexample;
  }
  if (!rep.well_defined && witness.empty()) witness = rep.well_defined_witness;
  results["chain_map"] = {{"degrees", degrees},
                          {"relations_checked", rep.relations_checked},
                          {"kills_relations", rep.well_defined}};
  verification["chain_map"] = property(rep.pass(), witness);
}

template <Field K>
void run_oracle(const Instance<K>& inst, json& results, json& verification) {
  if (!inst.cover) throw InputError("functor", "oracle needs a functor of kind \"cover\"");
  run_cech(inst, results, verification);
  auto nerve = nerve_cohomology(inst.k, *inst.cover);
  results["nerve"] = nerve;
  if (results.contains("cech")) {
    bool match = results["cech"]["cohomology"] == json(nerve);
    verification["oracle_match"] = property(match, match ? "" : "Cech and nerve dimensions differ");
  }
}

template <Field K>
void dispatch(Command cmd, const K& k, const ProblemFile& p, json& results, json& verification) {
  auto inst = build_instance(k, p);
  switch (cmd) {
    case Command::check: run_check(inst, results); break;
    case Command::cech: run_cech(inst, results, verification); break;
    case Command::amitsur: run_amitsur(inst, p, results, verification); break;
    case Command::verify: run_verify(inst, p, results, verification); break;
    case Command::oracle: run_oracle(inst, results, verification); break;
  }
}

}  // namespace detail

/// Runs one command. Never throws for problem content: input errors, violations
/// and cap hits are reported through the exit code and the report's "status".
inline Outcome execute(Command cmd, const ProblemFile& p) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  auto echo = to_json(p);
  json& r = out.report;
  r["tool"] = "ncc";
  r["version"] = version;
  r["command"] = command_name(cmd);
  r["field"] = p.field.name();
  r["input"] = {{"hash", "fnv1a64:" + fnv1a64(echo.dump())}, {"problem", echo}};
  json results = json::object(), verification = json::object();
  try {
    if (p.field.p) detail::dispatch(cmd, PrimeField(p.field.p), p, results, verification);
    else detail::dispatch(cmd, RationalField{}, p, results, verification);
    out.exit_code = detail::all_pass(verification) ? ExitCode::ok : ExitCode::violation;
    r["status"] = out.exit_code == ExitCode::ok ? "ok" : "violation";
  } catch (const SizeCapExceeded& e) {
    out.exit_code = ExitCode::resource_cap;
    r["status"] = "resource_cap";
    r["error"] = e.what();
  } catch (const InputError& e) {
    out.exit_code = ExitCode::input_error;
    r["status"] = "input_error";
    r["error"] = e.what();
  } catch (const NotAComplex& e) {
    out.exit_code = ExitCode::violation;
    r["status"] = "violation";
    r["error"] = e.what();
  }
  r["results"] = results;
  r["verification"] = verification;
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r["timing"] = {{"elapsed_ms", std::round(ms * 1000) / 1000}};
  return out;
}

/// Two-column table of the report, leaving out the echoed problem.
inline std::string render_text(const json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  std::function<void(const std::string&, const json&)> walk = [&](const std::string& key, const json& v) {
    if (v.is_object()) {
      for (const auto& [k, child] : v.items()) walk(key.empty() ? k : key + "." + k, child);
    } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); })) {
      for (std::size_t n = 0; n < v.size(); ++n) walk(key + "[" + std::to_string(n) + "]", v[n]);
    } else if (v.is_array()) {
      std::string s = "[";
      for (std::size_t n = 0; n < v.size(); ++n) s += (n ? ", " : "") + scalar(v[n]);
      rows.emplace_back(key, s + "]");
    } else {
      rows.emplace_back(key, scalar(v));
    }
  };
  for (const char* top : {"command", "field", "status", "error"})
    if (report.contains(top)) rows.emplace_back(top, scalar(report[top]));
  rows.emplace_back("input.hash", scalar(report["input"]["hash"]));
  walk("", json{{"results", report["results"]}});
  walk("", json{{"verification", report["verification"]}});
  walk("", json{{"timing", report["timing"]}});
  std::size_t width = 0;
  for (const auto& [k, _] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
  return os.str();
}

/// Entry point behind `ncc`; args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cech cohomology of noncommutative coverings of finite-dimensional algebras", "ncc"};
  app.set_version_flag("--version", version);
  app.require_subcommand(1);
  std::string input, output, format = "text", field_override;
  std::optional<std::size_t> n_max, dim_cap;
  const std::vector<std::pair<Command, const char*>> commands = {
      {Command::check, "completeness report of the covering"},
      {Command::cech, "Cech cohomology of the functor"},
      {Command::amitsur, "Amitsur complex homology and coring laws"},
      {Command::verify, "run every structural check"},
      {Command::oracle, "compare Cech cohomology of a cover with its nerve"}};
  std::map<CLI::App*, Command> subs;
  for (const auto& [cmd, help] : commands) {
    auto* s = app.add_subcommand(command_name(cmd), help);
    s->add_option("--input,-i", input, "problem file (JSON)")->required();
    s->add_option("--output,-o", output, "write the report here instead of stdout");
    s->add_option("--format,-f", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--n-max", n_max, "highest Amitsur degree");
    s->add_option("--dim-cap", dim_cap, "largest tensor power dimension to build");
    s->add_option("--field-override", field_override, "Q or F<p>, replacing the file's field");
    subs.emplace(s, cmd);
  }
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::input_error;
  }
  Command cmd = Command::check;
  for (const auto& [s, c] : subs)
    if (s->parsed()) cmd = c;

  Outcome outcome;
  try {
    std::ifstream in(input);
    if (!in) throw InputError(input, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    auto problem = parse_problem_text(buf.str());
    if (!field_override.empty()) problem.field = parse_field_override(field_override);
    if (n_max) {
      if (*n_max < 1) throw InputError("--n-max", "must be at least 1");
      problem.n_max = *n_max;
    }
    if (dim_cap) problem.dim_cap = *dim_cap;
    outcome = execute(cmd, problem);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    if (format == "json") out << json{{"status", "input_error"}, {"error", e.what()}}.dump(2) << '\n';
    return ExitCode::input_error;
  }
  if (outcome.report.contains("error")) err << "error: " << outcome.report["error"].get<std::string>() << '\n';
  const std::string text = format == "json" ? outcome.report.dump(2) + "\n" : render_text(outcome.report);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "error: cannot write " << output << '\n';
      return ExitCode::input_error;
    }
    f << text;
  }
  return outcome.exit_code;
}

}  // namespace ncc::cli

#endif  // NCC_CLI_HPP
