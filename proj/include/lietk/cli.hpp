#pragma once

// Command-line frontend. Each verb maps onto one library operation; data goes
// to the output stream, diagnostics to the error stream. Exit codes: 0 ok,
// 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lietk/io.hpp"
#include "lietk/random.hpp"

namespace lietk::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reported when a verification verb finds problems; exit code 1.
class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(const std::string& what) : Error("VerificationFailed", what) {}
};

struct RunConfig {
  std::string type;
  std::string input;
  std::string out;
  std::string format = "pretty";
  std::string r;
  std::string theta;
  std::string gens;
  int rank_bound = kDefaultRankBound;
  bool no_dedup = false;
  std::optional<std::uint64_t> seed;
};

namespace detail {

using io::Json;

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::string join(const RationalVector& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + to_string(v[i]);
  return s;
}

inline std::string paren(const IntVector& v) { return "(" + join(v) + ")"; }

inline std::string node_set(const std::vector<int>& v) { return "{" + join(v) + "}"; }

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline Json read_json(const RunConfig& cfg, std::istream& in) {
  try {
    if (cfg.input == "-") return Json::parse(in);
    std::ifstream f(cfg.input);
    if (!f) throw ParseError("cannot open '" + cfg.input + "'");
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline RootSystemPtr require_type(const RunConfig& cfg) {
  if (cfg.type.empty()) throw UsageError("--type is required");
  return build_root_system(cfg.type);
}

inline TorusElement torus_input(const RunConfig& cfg, std::istream& in) {
  if (!cfg.input.empty()) {
    if (!cfg.type.empty() || !cfg.r.empty() || !cfg.theta.empty())
      throw UsageError("--input excludes --type, --r and --theta");
    return io::torus_from_json(read_json(cfg, in));
  }
  const auto sys = require_type(cfg);
  if (cfg.r.empty()) throw UsageError("--r is required with --type");
  const auto rs = split(cfg.r, ',');
  const auto ts = cfg.theta.empty() ? std::vector<std::string>(rs.size(), "0") : split(cfg.theta, ',');
  if (static_cast<int>(rs.size()) != sys->rank() || static_cast<int>(ts.size()) != sys->rank())
    throw UsageError("--r/--theta need " + std::to_string(sys->rank()) + " comma-separated values");
  std::vector<RootValue> vals;
  for (std::size_t i = 0; i < rs.size(); ++i) vals.emplace_back(parse_rational(rs[i]), parse_rational(ts[i]));
  return {sys, std::move(vals)};
}

inline void format_torus(std::ostream& o, const TorusElement& s) {
  o << s.system()->name() << ":";
  for (const auto& v : s.values()) o << " q^" << to_string(v.r()) << "*e(" << to_string(v.theta()) << ")";
  o << "\n";
}

// ---- roots ---------------------------------------------------------------

inline void roots_gen(const RunConfig& cfg, std::ostream& o) {
  const auto sys = require_type(cfg);
  if (cfg.format == "json") {
    o << io::to_json(*sys).dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    for (std::size_t i = 0; i < sys->size(); ++i)
      o << i << "\t" << join(sys->root(i)) << "\t" << sys->height(i) << "\t" << (sys->is_positive(i) ? "+" : "-")
        << "\n";
  } else {
    o << sys->name() << ": rank " << sys->rank() << ", " << sys->size() << " roots\n";
    o << "cartan:\n";
    for (const auto& row : sys->cartan()) o << "  " << join(row, " ") << "\n";
    o << "positive roots:\n";
    for (auto i : sys->positives()) o << "  " << paren(sys->root(i)) << "  height " << sys->height(i) << "\n";
  }
}

inline Subsystem subsystem_input(const RunConfig& cfg, std::istream& in) {
  if (!cfg.input.empty()) {
    if (!cfg.type.empty() || !cfg.gens.empty()) throw UsageError("--input excludes --type and --gens");
    return io::subsystem_from_json(read_json(cfg, in));
  }
  const auto sys = require_type(cfg);
  if (cfg.gens.empty()) return whole_system(sys);
  std::vector<std::size_t> members;
  for (const auto& g : split(cfg.gens, ';')) {
    IntVector v;
    for (const auto& x : split(g, ',')) {
      try {
        v.push_back(std::stoi(x));
      } catch (const std::exception&) {
        throw UsageError("--gens: malformed root '" + g + "'");
      }
    }
    if (static_cast<int>(v.size()) != sys->rank()) throw UsageError("--gens: root '" + g + "' has the wrong length");
    const auto idx = sys->index_of(v);
    if (!idx) throw InvalidSetting(paren(v) + " is not a root of " + sys->name());
    members.push_back(*idx);
  }
  return closed_subsystem(sys, members);
}

inline void roots_sub(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  const Subsystem sub = subsystem_input(cfg, in);
  if (cfg.format == "json") {
    o << io::to_json(sub).dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    const auto base = sub.base_vectors();
    for (std::size_t k = 0; k < base.size(); ++k) o << k << "\t" << join(base[k]) << "\n";
  } else {
    o << "type " << component_string(irreducible_components(sub)) << ", rank " << sub.rank() << ", " << sub.size()
      << " roots\nbase:";
    for (const auto& b : sub.base_vectors()) o << " " << paren(b);
    o << "\ncartan:\n";
    for (const auto& row : sub.cartan()) o << "  " << join(row, " ") << "\n";
  }
}

// ---- orbits --------------------------------------------------------------

inline void orbits_distinguished(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  const Subsystem sub = subsystem_input(cfg, in);
  std::vector<OrbitLabel> labels;
  for (const auto& d : enumerate_distinguished(sub, cfg.rank_bound)) {
    OrbitLabel l;
    for (int k = 0; k < sub.rank(); ++k) l.levi.push_back(k);
    l.weight2 = d.weight2;
    l.diagram = coweight_from_datum(d).pairings;
    labels.push_back(std::move(l));
  }
  if (cfg.format == "json") {
    Json a = Json::array();
    for (const auto& l : labels) a.push_back(io::to_json(l));
    o << a.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    for (const auto& l : labels) o << join(l.weight2) << "\t" << join(l.diagram) << "\n";
  } else {
    for (const auto& l : labels) o << "J=" << node_set(l.weight2) << "  diagram " << join(l.diagram, " ") << "\n";
  }
}

inline void orbits_balacarter(const RunConfig& cfg, std::ostream& o) {
  const auto sys = require_type(cfg);
  const auto result = bala_carter(sys, !cfg.no_dedup, cfg.rank_bound);
  if (cfg.format == "json") {
    Json j;
    j["type"] = sys->name();
    j["dedup"] = !result.raw;
    Json a = Json::array();
    for (const auto& l : result.labels) a.push_back(io::to_json(l));
    j["labels"] = a;
    o << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    for (const auto& l : result.labels)
      o << join(l.levi) << "\t" << join(l.weight2) << "\t" << join(l.diagram) << "\n";
  } else {
    for (const auto& l : result.labels)
      o << "levi " << node_set(l.levi) << "  J " << node_set(l.weight2) << "  diagram " << join(l.diagram, " ")
        << "\n";
  }
}

// ---- qdist / l2pair ------------------------------------------------------

inline void qdist_check(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  const auto s = torus_input(cfg, in);
  const auto v = is_q_distinguished(s);
  if (cfg.format == "json") {
    Json j;
    j["q_distinguished"] = v.flag;
    j["margin"] = v.margin;
    j["dim_q"] = v.dim_q;
    j["dim_1"] = v.dim_1;
    o << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    o << (v.flag ? 1 : 0) << "\t" << v.margin << "\t" << v.dim_q << "\t" << v.dim_1 << "\n";
  } else {
    o << (v.flag ? "q-distinguished" : "not q-distinguished") << ", margin " << v.margin << "\n";
  }
}

inline void print_pair(const RunConfig& cfg, const L2Pair& p, std::ostream& o) {
  if (cfg.format == "json") {
    o << io::to_json(p).dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    std::vector<std::string> base;
    for (const auto& b : p.support.base_vectors()) base.push_back(join(b));
    std::string bs;
    for (std::size_t i = 0; i < base.size(); ++i) bs += (i ? ";" : "") + base[i];
    o << bs << "\t" << join(p.datum.weight2) << "\n";
  } else {
    format_torus(o, p.s);
    o << "support " << component_string(irreducible_components(p.support)) << ", base:";
    for (const auto& b : p.support.base_vectors()) o << " " << paren(b);
    o << "\nweight 2 on base nodes " << node_set(p.datum.weight2) << "\n";
  }
}

inline void l2pair_build(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  print_pair(cfg, construct_l2_pair(torus_input(cfg, in)), o);
}

inline void l2pair_verify(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  const auto rep = verify_l2_pair(io::l2pair_from_json(read_json(cfg, in)));
  if (cfg.format == "json") {
    Json j;
    j["ok"] = rep.ok;
    j["diagnostics"] = rep.diagnostics;
    o << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    o << (rep.ok ? 1 : 0) << "\t" << rep.diagnostics.size() << "\n";
    for (const auto& d : rep.diagnostics) o << "\t" << d << "\n";
  } else {
    o << (rep.ok ? "ok" : "FAILED") << "\n";
    for (const auto& d : rep.diagnostics) o << "  " << d << "\n";
  }
  if (!rep.ok) throw VerificationFailed(std::to_string(rep.diagnostics.size()) + " problem(s) found");
}

// ---- mupole --------------------------------------------------------------

inline io::MuInput mu_input(const RunConfig& cfg, std::istream& in) {
  if (!cfg.input.empty()) {
    if (cfg.seed || !cfg.type.empty()) throw UsageError("--input excludes --type and --seed");
    return io::mu_input_from_json(read_json(cfg, in));
  }
  const auto sys = require_type(cfg);
  if (cfg.seed) {
    random::Rng rng(*cfg.seed);
    auto [ms, s] = random::mu_setting(rng, sys);
    return {std::move(ms), std::move(s)};
  }
  // Principal setting at q^{rho^vee}.
  return {random::principal_setting(sys), random::rho_check(sys)};
}

inline Json mu_input_json(const io::MuInput& mi) {
  Json j = io::to_json(mi.setting);
  j["s"] = io::to_json(mi.s);
  return j;
}

inline void mupole_ledger(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  const auto mi = mu_input(cfg, in);
  const auto ledger = total_order(mi.setting, mi.s);
  if (cfg.format == "json") {
    Json j;
    j["input"] = mu_input_json(mi);
    j["ledger"] = io::to_json(ledger);
    o << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    for (const auto& e : ledger.entries)
      o << join(e.line) << "\t" << e.dq << "\t" << e.d1 << "\t" << to_string(e.cls) << "\n";
  } else {
    for (const auto& e : ledger.entries)
      o << paren(e.line) << "  dq=" << e.dq << " d1=" << e.d1 << "  " << to_string(e.cls) << "\n";
    o << "total " << ledger.total << "\n";
  }
}

inline void mupole_sqint(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  const auto mi = mu_input(cfg, in);
  const auto rep = square_integrable(mi.setting, mi.s);
  if (cfg.format == "json") {
    Json j;
    j["input"] = mu_input_json(mi);
    j["square_integrable"] = rep.flag;
    j["rank_ok"] = rep.rank_ok;
    j["cent_rank"] = rep.cent_rank;
    j["parabolic_rank"] = rep.parabolic_rank;
    j["q_distinguished"] = rep.qdist.flag;
    j["margin"] = rep.qdist.margin;
    if (rep.ledger_total) j["ledger_total"] = *rep.ledger_total;
    else j["ledger_total"] = nullptr;
    if (!rep.ledger_error.empty()) j["ledger_error"] = rep.ledger_error;
    o << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    o << (rep.flag ? 1 : 0) << "\t" << rep.cent_rank << "\t" << rep.parabolic_rank << "\t"
      << (rep.qdist.flag ? 1 : 0) << "\t" << (rep.ledger_total ? std::to_string(*rep.ledger_total) : "-") << "\n";
  } else {
    o << (rep.flag ? "square-integrable" : "not square-integrable") << "\n";
    o << "  centralizer rank " << rep.cent_rank << ", parabolic rank " << rep.parabolic_rank << "\n";
    o << "  " << (rep.qdist.flag ? "q-distinguished" : "not q-distinguished") << ", margin " << rep.qdist.margin
      << "\n";
    if (rep.ledger_total) o << "  pole order " << *rep.ledger_total << "\n";
    else o << "  pole ledger unavailable: " << rep.ledger_error << "\n";
  }
}

// ---- param ---------------------------------------------------------------

inline ParameterSkeleton skeleton_input(const RunConfig& cfg, std::istream& in) {
  if (!cfg.input.empty()) {
    if (cfg.seed || !cfg.type.empty()) throw UsageError("--input excludes --type and --seed");
    return io::skeleton_from_json(read_json(cfg, in));
  }
  const auto sys = require_type(cfg);
  if (!cfg.seed) throw UsageError("--seed or --input is required");
  random::Rng rng(*cfg.seed);
  return random::skeleton(rng, sys);
}

inline void param_split(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  const auto split_parts = frobenius_split(torus_input(cfg, in));
  if (cfg.format == "json") {
    Json j;
    j["nr"] = io::to_json(split_parts.nr);
    j["fin"] = io::to_json(split_parts.fin);
    j["fin_order"] = split_parts.fin_order;
    o << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    o << join(split_parts.nr.r_vector()) << "\t" << join(split_parts.fin.theta_vector()) << "\t"
      << split_parts.fin_order << "\n";
  } else {
    o << "unramified ";
    format_torus(o, split_parts.nr);
    o << "finite     ";
    format_torus(o, split_parts.fin);
    o << "finite order " << split_parts.fin_order << "\n";
  }
}

inline void print_skeleton(const RunConfig& cfg, const ParameterSkeleton& p, std::ostream& o) {
  if (cfg.format == "json") {
    o << io::to_json(p).dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    o << join(p.min_levi) << "\t" << p.cent.size() << "\t" << join(p.frob.r_vector()) << "\t"
      << join(p.frob.theta_vector()) << "\t" << (p.sl2 ? join(p.sl2->pairings) : "-") << "\n";
  } else {
    o << "ambient " << p.ambient->name() << ", minimal Levi " << node_set(p.min_levi) << "\n";
    o << "centralizer " << component_string(irreducible_components(p.cent)) << " (" << p.cent.size() << " roots)\n";
    o << "frob ";
    format_torus(o, p.frob);
    if (p.sl2) o << "sl2 pairings " << join(p.sl2->pairings, " ") << "\n";
  }
}

inline void param_discrete(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  const auto p = skeleton_input(cfg, in);
  const auto rep = is_discrete(p);
  if (cfg.format == "json") {
    Json j;
    j["input"] = io::to_json(p);
    j["discrete"] = rep.flag;
    j["rank_ok"] = rep.rank_ok;
    j["pair_ok"] = rep.pair_ok;
    j["diagnostics"] = rep.diagnostics;
    o << j.dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    o << (rep.flag ? 1 : 0) << "\t" << (rep.rank_ok ? 1 : 0) << "\t" << (rep.pair_ok ? 1 : 0) << "\n";
  } else {
    print_skeleton(cfg, p, o);
    o << (rep.flag ? "discrete" : "not discrete") << "\n";
    for (const auto& d : rep.diagnostics) o << "  " << d << "\n";
  }
}

inline void param_decompose(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  const auto t = langlands_decompose(skeleton_input(cfg, in));
  if (cfg.format == "json") {
    o << io::to_json(t).dump(2) << "\n";
  } else if (cfg.format == "tsv") {
    o << join(t.lambda2) << "\t" << t.m2.rank() << "\t" << join(t.discrete_part.frob.r_vector()) << "\n";
  } else {
    o << "lambda " << join(t.lambda2, " ") << "\n";
    o << "M'' " << component_string(irreducible_components(t.m2)) << ", chamber:";
    for (const auto& b : t.chamber) o << " " << paren(b);
    o << "\ndiscrete part:\n";
    print_skeleton(cfg, t.discrete_part, o);
  }
}

inline void param_assemble(const RunConfig& cfg, std::istream& in, std::ostream& o) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  print_skeleton(cfg, langlands_assemble(io::triple_from_json(read_json(cfg, in))), o);
}

// ---- tables --------------------------------------------------------------

inline const std::vector<std::string>& golden_distinguished_types() {
  static const std::vector<std::string> v{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4",
                                          "C3", "D4", "G2", "F4", "E6", "E7", "E8"};
  return v;
}

inline const std::vector<std::string>& golden_orbit_types() {
  static const std::vector<std::string> v{"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6"};
  return v;
}

inline Json golden_tables() {
  Json j;
  Json d;
  for (const auto& t : golden_distinguished_types())
    d[t] = enumerate_distinguished(whole_system(build_root_system(t))).size();
  Json n;
  for (const auto& t : golden_orbit_types()) n[t] = bala_carter(build_root_system(t)).labels.size();
  j["distinguished"] = d;
  j["orbits"] = n;
  return j;
}

inline void tables_golden(const RunConfig& cfg, std::ostream& o) {
  const Json j = golden_tables();
  if (cfg.format == "tsv") {
    for (const auto& [k, v] : j["distinguished"].items()) o << "distinguished\t" << k << "\t" << v << "\n";
    for (const auto& [k, v] : j["orbits"].items()) o << "orbits\t" << k << "\t" << v << "\n";
  } else {
    o << j.dump(2) << "\n";
  }
}

}  // namespace detail

inline const char* kTsvHelp =
    "TSV columns:\n"
    "  roots gen              index, root, height, sign\n"
    "  roots sub              base index, base root\n"
    "  orbits distinguished   weight-2 nodes, diagram\n"
    "  orbits balacarter      levi nodes, weight-2 nodes, diagram\n"
    "  qdist check            flag, margin, dim g(q), dim g(1)\n"
    "  l2pair build           support base (';'-separated), weight-2 nodes\n"
    "  l2pair verify          ok, #diagnostics, then one tab-indented diagnostic per line\n"
    "  mupole ledger          line, dq, d1, class\n"
    "  mupole sqint           flag, cent rank, parabolic rank, q-distinguished, pole order\n"
    "  param split            r of unramified part, theta of finite part, finite order\n"
    "  param discrete         flag, rank ok, pair ok\n"
    "  param decompose        lambda, rank of M'', r of discrete frob\n"
    "  param assemble         min_levi, #cent roots, frob r, frob theta, sl2 pairings\n"
    "  tables golden          table, type, count\n";

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root-system toolkit for q-distinguished elements, L2-pairs, mu-poles and parameter skeletons",
               "lietk"};
  app.require_subcommand(1);
  app.footer(kTsvHelp);
  RunConfig cfg;
  std::string verb;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));
    c->add_option("--out", cfg.out, "Write data to this file instead of stdout");
  };
  auto add_type = [&](CLI::App* c) { c->add_option("--type", cfg.type, "Cartan type, e.g. B3 or A1xG2"); };
  auto add_input = [&](CLI::App* c) { c->add_option("--input", cfg.input, "JSON input file ('-' for stdin)"); };
  auto add_torus = [&](CLI::App* c) {
    add_type(c);
    c->add_option("--r", cfg.r, "Comma-separated exponents r_i of q on the simple roots");
    c->add_option("--theta", cfg.theta, "Comma-separated phases theta_i (mod 1); default 0");
    add_input(c);
  };
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", cfg.seed, "Generate a random valid input"); };
  auto verb_cmd = [&](CLI::App* group, const std::string& name, const std::string& desc) {
    auto* c = group->add_subcommand(name, desc);
    c->callback([&verb, group, name] { verb = group->get_name() + " " + name; });
    add_format(c);
    return c;
  };

  auto* roots = app.add_subcommand("roots", "Root systems and closed subsystems");
  roots->require_subcommand(1);
  add_type(verb_cmd(roots, "gen", "List the roots of a Cartan type"));
  {
    auto* c = verb_cmd(roots, "sub", "Closed subsystem generated by roots");
    add_type(c);
    c->add_option("--gens", cfg.gens, "Generating roots, e.g. \"1,0;0,1\"");
    add_input(c);
  }
  auto* orbits = app.add_subcommand("orbits", "Distinguished parabolics and nilpotent orbits");
  orbits->require_subcommand(1);
  {
    auto* c = verb_cmd(orbits, "distinguished", "Distinguished parabolic data of a (sub)system");
    add_type(c);
    c->add_option("--gens", cfg.gens, "Restrict to the subsystem generated by these roots");
    add_input(c);
    c->add_option("--rank-bound", cfg.rank_bound, "Largest rank enumerated");
  }
  {
    auto* c = verb_cmd(orbits, "balacarter", "Bala-Carter labels of nilpotent orbits");
    add_type(c);
    c->add_option("--rank-bound", cfg.rank_bound, "Largest rank enumerated");
    c->add_flag("--no-dedup", cfg.no_dedup, "Skip Weyl deduplication of Levi subsets");
  }
  auto* qdist = app.add_subcommand("qdist", "q-distinguished test");
  qdist->require_subcommand(1);
  add_torus(verb_cmd(qdist, "check", "Test whether s is q-distinguished"));
  auto* l2 = app.add_subcommand("l2pair", "L2-pairs");
  l2->require_subcommand(1);
  add_torus(verb_cmd(l2, "build", "Construct the L2-pair of a q-distinguished s"));
  add_input(verb_cmd(l2, "verify", "Verify an L2-pair document"));
  auto* mu = app.add_subcommand("mupole", "Pole ledger of the mu-function");
  mu->require_subcommand(1);
  for (auto [name, desc] : {std::pair{"ledger", "Per-line pole ledger"},
                            std::pair{"sqint", "Square-integrability report"}}) {
    auto* c = verb_cmd(mu, name, desc);
    add_input(c);
    add_type(c);
    add_seed(c);
  }
  auto* param = app.add_subcommand("param", "Parameter skeletons");
  param->require_subcommand(1);
  add_torus(verb_cmd(param, "split", "Split frob into unramified and finite-order parts"));
  for (auto [name, desc] : {std::pair{"discrete", "Discreteness test"},
                            std::pair{"decompose", "Langlands decomposition"}}) {
    auto* c = verb_cmd(param, name, desc);
    add_input(c);
    add_type(c);
    add_seed(c);
  }
  add_input(verb_cmd(param, "assemble", "Reassemble a skeleton from a decomposition"));
  auto* tables = app.add_subcommand("tables", "Reference tables");
  tables->require_subcommand(1);
  verb_cmd(tables, "golden", "Regenerate the golden orbit tables");

  std::vector<const char*> argv{"lietk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream data;
  try {
    if (verb == "roots gen") detail::roots_gen(cfg, data);
    else if (verb == "roots sub") detail::roots_sub(cfg, in, data);
    else if (verb == "orbits distinguished") detail::orbits_distinguished(cfg, in, data);
    else if (verb == "orbits balacarter") detail::orbits_balacarter(cfg, data);
    else if (verb == "qdist check") detail::qdist_check(cfg, in, data);
    else if (verb == "l2pair build") detail::l2pair_build(cfg, in, data);
    else if (verb == "l2pair verify") detail::l2pair_verify(cfg, in, data);
    else if (verb == "mupole ledger") detail::mupole_ledger(cfg, in, data);
    else if (verb == "mupole sqint") detail::mupole_sqint(cfg, in, data);
    else if (verb == "param split") detail::param_split(cfg, in, data);
    else if (verb == "param discrete") detail::param_discrete(cfg, in, data);
    else if (verb == "param decompose") detail::param_decompose(cfg, in, data);
    else if (verb == "param assemble") detail::param_assemble(cfg, in, data);
    else if (verb == "tables golden") detail::tables_golden(cfg, data);
    else throw UsageError("no verb given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return 2;
  } catch (const NotQDistinguished& e) {
    err << e.kind() << ": " << e.what() << "\n  " << e.detail() << "\n";
    return 1;
  } catch (const VerificationFailed& e) {
    out << data.str();
    err << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return 1;
  }

  if (cfg.out.empty()) {
    out << data.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "IOError: cannot write '" << cfg.out << "'\n";
      return 1;
    }
    f << data.str();
  }
  return 0;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace lietk::cli
