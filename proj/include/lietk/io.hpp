#pragma once

// JSON documents for every public value. Field order is fixed (ordered_json)
// and rationals are written as "p/q" strings so output is byte-stable.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lietk/l2pair.hpp"
#include "lietk/lparam.hpp"
#include "lietk/mupole.hpp"
#include "lietk/orbits.hpp"
#include "lietk/rootsys.hpp"
#include "lietk/torus.hpp"

namespace lietk::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

inline Rational rational_field(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("rational must be a \"p/q\" string or an integer");
}

inline IntVector int_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  IntVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("expected an integer array");
    v.push_back(x.get<int>());
  }
  return v;
}

inline std::vector<IntVector> int_vectors(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integer vectors");
  std::vector<IntVector> out;
  for (const auto& x : j) out.push_back(int_vector(x));
  return out;
}

inline RationalVector rational_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_field(x));
  return v;
}

inline Json rational_array(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline std::vector<std::size_t> root_indices(const RootSystem& sys, const std::vector<IntVector>& roots) {
  std::vector<std::size_t> out;
  for (const auto& r : roots) {
    if (static_cast<int>(r.size()) != sys.rank()) throw ParseError("root has the wrong length");
    const auto idx = sys.index_of(r);
    if (!idx) throw ParseError("vector is not a root of " + sys.name());
    out.push_back(*idx);
  }
  return out;
}

inline std::vector<int> node_list(const Json& j, int rank) {
  std::vector<int> out;
  for (int v : int_vector(j)) {
    if (v < 0 || v >= rank) throw ParseError("node index " + std::to_string(v) + " out of range");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

inline Json to_json(const RootSystem& sys) {
  Json j;
  j["type"] = sys.name();
  j["rank"] = sys.rank();
  j["cartan"] = sys.cartan();
  j["roots"] = sys.roots();
  return j;
}

inline RootSystemPtr root_system_from_json(const Json& j) {
  auto sys = build_root_system(detail::field(j, "type").get<std::string>());
  if (j.contains("cartan") && detail::int_vectors(j.at("cartan")) != sys->cartan())
    throw ParseError("cartan matrix disagrees with the named type");
  return sys;
}

inline Json to_json(const Subsystem& sub) {
  Json j;
  j["type"] = component_string(irreducible_components(sub));
  j["rank"] = sub.rank();
  j["cartan"] = sub.cartan();
  std::vector<IntVector> roots;
  for (auto m : sub.members()) roots.push_back(sub.parent()->root(m));
  j["roots"] = roots;
  j["parent"] = sub.parent()->name();
  j["base"] = sub.base_vectors();
  return j;
}

/// Positivity "nonnegative in the given base": used to restore a subsystem
/// whose base was chosen by something other than parent positivity.
inline Positivity positivity_from_base(const RootSystemPtr& sys, const std::vector<IntVector>& base) {
  std::vector<std::size_t> gens = detail::root_indices(*sys, base);
  const Subsystem span = closed_subsystem(sys, gens);
  ParabolicDatum probe{span, {}};
  // Coordinates against the supplied base (not span's own base).
  std::map<std::size_t, bool> positive;
  linalg::Matrix m;
  const std::size_t k = base.size();
  for (auto member : span.members()) {
    linalg::Matrix a(static_cast<std::size_t>(sys->rank()), RationalVector(k + 1));
    for (std::size_t b = 0; b < k; ++b)
      for (int i = 0; i < sys->rank(); ++i) a[i][b] = base[b][i];
    for (int i = 0; i < sys->rank(); ++i) a[i][k] = sys->root(member)[i];
    linalg::row_reduce(a);
    bool pos = true;
    for (std::size_t b = 0; b < k; ++b) {
      if (a[b][k] < 0) pos = false;
      if (!is_integer(a[b][k])) throw ParseError("supplied base does not generate the subsystem integrally");
    }
    positive[member] = pos;
  }
  return [positive](std::size_t i) {
    auto it = positive.find(i);
    return it != positive.end() && it->second;
  };
}

inline Subsystem subsystem_from_json(const Json& j, const RootSystemPtr& parent) {
  const auto members = detail::root_indices(*parent, detail::int_vectors(detail::field(j, "roots")));
  if (j.contains("base")) {
    const auto base = detail::int_vectors(j.at("base"));
    if (base.empty()) return closed_subsystem(parent, members);
    Subsystem sub = closed_subsystem(parent, members, positivity_from_base(parent, base));
    if (sub.base_vectors() != base) throw ParseError("supplied base is not a base of the subsystem");
    return sub;
  }
  return closed_subsystem(parent, members);
}

inline Subsystem subsystem_from_json(const Json& j) {
  return subsystem_from_json(j, build_root_system(detail::field(j, "parent").get<std::string>()));
}

inline Json to_json(const TorusElement& s) {
  Json j;
  j["sys"] = s.system()->name();
  Json vals = Json::array();
  for (const auto& v : s.values()) {
    Json e;
    e["r"] = to_string(v.r());
    e["theta"] = to_string(v.theta());
    vals.push_back(e);
  }
  j["vals"] = vals;
  return j;
}

inline TorusElement torus_from_json(const Json& j, const RootSystemPtr& sys) {
  const auto& vals = detail::field(j, "vals");
  if (!vals.is_array()) throw ParseError("'vals' must be an array");
  std::vector<RootValue> v;
  for (const auto& e : vals)
    v.emplace_back(detail::rational_field(detail::field(e, "r")),
                   e.contains("theta") ? detail::rational_field(e.at("theta")) : Rational(0));
  if (static_cast<int>(v.size()) != sys->rank()) throw ParseError("'vals' length differs from the rank");
  return {sys, std::move(v)};
}

inline TorusElement torus_from_json(const Json& j) {
  return torus_from_json(j, build_root_system(detail::field(j, "sys").get<std::string>()));
}

inline Json to_json(const OrbitLabel& label) {
  Json j;
  j["levi"] = label.levi;
  j["weight2"] = label.weight2;
  j["diagram"] = detail::rational_array(label.diagram);
  return j;
}

inline OrbitLabel orbit_label_from_json(const Json& j) {
  return {detail::field(j, "levi").get<std::vector<int>>(), detail::field(j, "weight2").get<std::vector<int>>(),
          detail::rational_vector(detail::field(j, "diagram"))};
}

inline Json to_json(const ParabolicDatum& d) {
  Json j;
  j["base"] = d.sub.base_vectors();
  j["weight2"] = d.weight2;
  return j;
}

inline Json to_json(const L2Pair& p) {
  Json j;
  j["s"] = to_json(p.s);
  j["support_base"] = p.support.base_vectors();
  j["weight2"] = p.datum.weight2;
  if (p.ambient.size() != p.s.system()->size()) j["ambient_base"] = p.ambient.base_vectors();
  return j;
}

inline L2Pair l2pair_from_json(const Json& j) {
  const TorusElement s = torus_from_json(detail::field(j, "s"));
  const auto& sys = s.system();
  const auto base = detail::int_vectors(detail::field(j, "support_base"));
  Subsystem support = base.empty() ? closed_subsystem(sys, {})
                                   : closed_subsystem(sys, detail::root_indices(*sys, base),
                                                      positivity_from_base(sys, base));
  if (support.base_vectors() != base) throw ParseError("support_base is not a base of the subsystem it generates");
  Subsystem ambient = whole_system(sys);
  if (j.contains("ambient_base")) {
    const auto ab = detail::int_vectors(j.at("ambient_base"));
    ambient = closed_subsystem(sys, detail::root_indices(*sys, ab));
  }
  ParabolicDatum datum{support, {}};
  for (int k : detail::field(j, "weight2").get<std::vector<int>>()) {
    if (k < 0 || k >= support.rank()) throw ParseError("weight2 index out of range");
    datum.weight2.push_back(k);
  }
  return {s, ambient, support, datum};
}

inline Json to_json(const WeightedCoweight& w) {
  Json j;
  j["base"] = w.sub.base_vectors();
  j["pairings"] = detail::rational_array(w.pairings);
  j["ambient_pairings"] = detail::rational_array(ambient_pairings(w));
  return j;
}

inline std::string line_key(const IntVector& root) {
  std::string s;
  for (std::size_t i = 0; i < root.size(); ++i) s += (i ? "," : "") + std::to_string(root[i]);
  return s;
}

inline IntVector parse_line_key(const std::string& key) {
  IntVector v;
  std::size_t start = 0;
  while (start <= key.size()) {
    auto next = key.find(',', start);
    if (next == std::string::npos) next = key.size();
    try {
      v.push_back(std::stoi(key.substr(start, next - start)));
    } catch (const std::exception&) {
      throw ParseError("malformed root key '" + key + "'");
    }
    start = next + 1;
  }
  return v;
}

struct MuInput {
  MuSetting setting;
  TorusElement s;
};

inline Json to_json(const MuSetting& ms) {
  Json j;
  j["ambient"] = ms.ambient->name();
  j["levi"] = ms.levi;
  std::vector<IntVector> members;
  for (auto m : ms.cent.members()) members.push_back(ms.ambient->root(m));
  j["cent_members"] = members;
  Json lm = Json::object();
  for (const auto& [idx, line] : ms.line_map) {
    if (line) lm[line_key(ms.ambient->root(idx))] = *line;
    else lm[line_key(ms.ambient->root(idx))] = "internal";
  }
  j["line_map"] = lm;
  return j;
}

inline MuInput mu_input_from_json(const Json& j) {
  auto sys = build_root_system(detail::field(j, "ambient").get<std::string>());
  const auto levi = detail::node_list(detail::field(j, "levi"), sys->rank());
  const auto members = detail::root_indices(*sys, detail::int_vectors(detail::field(j, "cent_members")));
  Subsystem cent = closed_subsystem(sys, members);
  if (cent.size() != members.size() && !members.empty()) {
    // closure added roots: the supplied set was not closed
    throw ParseError("cent_members is not a closed subsystem");
  }
  std::map<std::size_t, std::optional<IntVector>> supplied;
  if (j.contains("line_map")) {
    for (const auto& [key, value] : j.at("line_map").items()) {
      const auto idx = sys->index_of(parse_line_key(key));
      if (!idx) throw ParseError("line_map key '" + key + "' is not a root");
      if (value.is_string() && value.get<std::string>() == "internal") supplied[*idx] = std::nullopt;
      else supplied[*idx] = detail::int_vector(value);
    }
  }
  MuSetting ms = make_setting(sys, levi, cent, supplied);
  TorusElement s = j.contains("s") ? torus_from_json(j.at("s"), sys) : TorusElement::identity(sys);
  return {std::move(ms), std::move(s)};
}

inline Json to_json(const PoleLedger& ledger) {
  Json j;
  Json lines = Json::array();
  for (const auto& e : ledger.entries) {
    Json row;
    row["root"] = e.line;
    row["dq"] = e.dq;
    row["d1"] = e.d1;
    row["class"] = to_string(e.cls);
    lines.push_back(row);
  }
  j["lines"] = lines;
  j["total"] = ledger.total;
  return j;
}

inline Json to_json(const ParameterSkeleton& p) {
  Json j;
  j["ambient"] = p.ambient->name();
  j["min_levi"] = p.min_levi;
  std::vector<IntVector> members;
  for (auto m : p.cent.members()) members.push_back(p.ambient->root(m));
  j["cent_members"] = members;
  j["cent_base"] = p.cent.base_vectors();
  j["frob"] = to_json(p.frob);
  if (p.sl2) j["sl2"] = detail::rational_array(p.sl2->pairings);
  else j["sl2"] = nullptr;
  return j;
}

inline ParameterSkeleton skeleton_from_json(const Json& j, RootSystemPtr sys = nullptr) {
  if (!sys) sys = build_root_system(detail::field(j, "ambient").get<std::string>());
  ParameterSkeleton p;
  p.ambient = sys;
  p.min_levi = detail::node_list(detail::field(j, "min_levi"), sys->rank());
  const auto members = detail::root_indices(*sys, detail::int_vectors(detail::field(j, "cent_members")));
  p.cent = closed_subsystem(sys, members);
  if (j.contains("cent_base") && !j.at("cent_base").empty() &&
      detail::int_vectors(j.at("cent_base")) != p.cent.base_vectors())
    p.cent = closed_subsystem(sys, members, positivity_from_base(sys, detail::int_vectors(j.at("cent_base"))));
  p.frob = j.contains("frob") ? torus_from_json(j.at("frob"), sys) : TorusElement::identity(sys);
  if (j.contains("sl2") && !j.at("sl2").is_null())
    p.sl2 = coweight_from_pairings(p.cent, detail::rational_vector(j.at("sl2")));
  return p;
}

inline Json to_json(const LanglandsTriple& t) {
  Json j;
  j["m2_base"] = t.m2.base_vectors();
  j["lambda2"] = detail::rational_array(t.lambda2);
  j["chamber"] = t.chamber;
  j["discrete_part"] = to_json(t.discrete_part);
  return j;
}

inline LanglandsTriple triple_from_json(const Json& j) {
  LanglandsTriple t;
  t.discrete_part = skeleton_from_json(detail::field(j, "discrete_part"));
  const auto& sys = t.discrete_part.ambient;
  t.lambda2 = detail::rational_vector(detail::field(j, "lambda2"));
  if (static_cast<int>(t.lambda2.size()) != sys->rank()) throw ParseError("lambda2 length differs from the rank");
  t.chamber = detail::int_vectors(detail::field(j, "chamber"));
  const auto m2_base = detail::int_vectors(detail::field(j, "m2_base"));
  t.m2 = m2_base.empty() ? closed_subsystem(sys, {})
                         : closed_subsystem(sys, detail::root_indices(*sys, m2_base),
                                            positivity_from_base(sys, m2_base));
  return t;
}

}  // namespace lietk::io
