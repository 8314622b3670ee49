// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "scissors/scissors.hpp"

namespace scissors::cli {
namespace {

using nlohmann::json;

struct Options {
  std::uint64_t budget = Budget::kDefaultLimit;
  bool json = false;
  std::uint64_t seed = 0;  // reserved
  std::string file;
  std::vector<std::string> names;  // positional extras
  std::size_t depth = 3;
  std::string sieve;
  std::string sub;
  std::size_t max_tuple = 2;
  std::string space = "level1";
  std::size_t degree = 2;
  std::string emit;
};

class Reporter {
 public:
  Reporter(std::ostream& out, bool json) : out_(out), json_(json) {}

  bool json_mode() const { return json_; }
  json& doc() { return doc_; }
  void line(const std::string& s) {
    if (!json_) out_ << s << "\n";
  }
  void finish() {
    if (json_) out_ << doc_.dump(2) << "\n";
  }

 private:
  std::ostream& out_;
  bool json_;
  json doc_ = json::object();
};

std::string ok(bool b) { return b ? "OK" : "FAIL"; }

json group_json(const AbelianGroup& g) {
  json t = json::array();
  for (const auto& d : g.torsion) t.push_back(d.get_str());
  return {{"rank", g.rank}, {"torsion", t}, {"text", g.to_string()}};
}

std::string relation_text(const K0Group& k, const K0Relation& r) {
  std::string s = k.generator_names()[r.target] + " =";
  if (r.pieces.empty()) return s + " 0";
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    s += (i ? " + " : " ") + k.generator_names()[r.pieces[i]];
  }
  return s;
}

const ObjectSet& named_set(const AssemblerDocument& doc, const std::string& name) {
  auto it = doc.sieves.find(name);
  if (it == doc.sieves.end()) throw InvalidInput("document has no object set named '" + name + "'");
  return it->second;
}

std::string names_of(const Assembler& a, const std::vector<MorIdx>& fs) {
  std::string s = "{";
  for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? ", " : "") + a.mor_name(fs[i]);
  return s + "}";
}

int cmd_validate(const Options& o, Reporter& r, Budget& budget) {
  AssemblerDocument doc = load_document(o.file);
  const Assembler& a = doc.assembler;
  AxiomReport ax = check_axioms(a, budget);
  json& j = r.doc();
  j["objects"] = a.cat().object_count();
  j["morphisms"] = a.cat().morphism_count();
  j["initial"] = a.name(a.initial());
  j["category"] = true;
  j["initial_ok"] = ax.initial_ok;
  j["axiom_I"] = ax.holds_I;
  j["axiom_R"] = ax.holds_R;
  j["axiom_M"] = ax.holds_M;
  j["budget_exhausted"] = ax.budget_exhausted_R;
  json problems = json::array();
  for (const auto& v : ax.initial_violations) problems.push_back(v);
  for (const auto& w : ax.mono_violations) {
    problems.push_back("not monic: " + a.mor_name(w.f) + " " + a.mor_name(w.g) + " = " +
                       a.mor_name(w.f) + " " + a.mor_name(w.h));
  }
  for (const auto& f : ax.refinement_failures) {
    problems.push_back("no common refinement of " + describe(a, f.first) + " and " +
                       describe(a, f.second));
  }
  j["violations"] = problems;
  r.line("objects: " + std::to_string(a.cat().object_count()) + " (initial " + a.name(a.initial()) + ")");
  r.line("morphisms: " + std::to_string(a.cat().morphism_count()));
  r.line("declared covers: " + std::to_string(a.declared_covers().size()));
  r.line("category: OK");
  r.line("initial object: " + ok(ax.initial_ok));
  r.line("axiom I: " + ok(ax.holds_I));
  r.line("axiom R: " + (ax.budget_exhausted_R ? std::string("budget exhausted") : ok(ax.holds_R)));
  r.line("axiom M: " + ok(ax.holds_M));
  for (const auto& p : problems) r.line("  " + p.get<std::string>());
  r.finish();
  if (ax.budget_exhausted_R) return kBudget;
  return ax.all_hold() ? kOk : kFailure;
}

int cmd_k0(const Options& o, Reporter& r, Budget& budget) {
  AssemblerDocument doc = load_document(o.file);
  const Assembler& a = doc.assembler;
  K0Group k = k0(a, budget);
  json& j = r.doc();
  j["generators"] = k.generator_names();
  json rels = json::array();
  r.line("generators: " + std::to_string(k.generator_count()));
  r.line("relations: " + std::to_string(k.relation_count()));
  for (const auto& rel : k.relations()) {
    std::string text = relation_text(k, rel);
    rels.push_back({{"relation", text}, {"origin", rel.origin}});
    r.line("  " + text + "   (" + rel.origin + ")");
  }
  j["relations"] = rels;
  j["group"] = group_json(k.group());
  r.line("K0 = " + k.group().to_string());
  r.line("rank: " + std::to_string(k.rank()));
  std::string tors;
  for (const auto& d : k.torsion()) tors += (tors.empty() ? "" : ", ") + d.get_str();
  r.line("torsion: " + (tors.empty() ? std::string("none") : tors));
  r.line("classes:");
  json classes = json::object();
  for (ObjIdx x : a.noninitial_objects()) {
    std::string c = class_of(a, k, x).to_string();
    classes[a.name(x)] = c;
    r.line("  " + a.name(x) + "  " + c);
  }
  j["classes"] = classes;
  r.finish();
  return kOk;
}

int cmd_sc(const Options& o, Reporter& r, Budget& budget) {
  AssemblerDocument doc = load_document(o.file);
  const Assembler& a = doc.assembler;
  if (o.names.size() != 2) throw InvalidInput("sc needs two object names");
  ObjIdx x = a.cat().object(o.names[0]);
  ObjIdx y = a.cat().object(o.names[1]);
  auto w = scissors_congruent(a, x, y, o.depth, budget);
  json& j = r.doc();
  j["found"] = w.has_value();
  j["depth"] = o.depth;
  if (!w) {
    r.line("no witness within depth " + std::to_string(o.depth) + " (not a disproof)");
    r.finish();
    return kOk;
  }
  K0Group k = k0(a, budget);
  bool sound = verify_witness(a, *w) && class_of(a, k, x) == class_of(a, k, y);
  j["first"] = describe(a, w->first);
  j["second"] = describe(a, w->second);
  json isos = json::array();
  for (MorIdx u : w->isos) isos.push_back(a.mor_name(u));
  j["isomorphisms"] = isos;
  j["classes_equal"] = sound;
  r.line("witness: " + describe(a, w->first) + "  ~  " + describe(a, w->second));
  r.line("piece isomorphisms: " + names_of(a, w->isos));
  r.line("equal K0 classes: " + std::string(sound ? "yes" : "no"));
  r.finish();
  return sound ? kOk : kFailure;
}

int cmd_quotient(const Options& o, Reporter& r, Budget& budget) {
  AssemblerDocument doc = load_document(o.file);
  const Assembler& c = doc.assembler;
  const ObjectSet& d = named_set(doc, o.sieve);
  SieveWitness sw = is_sieve(c, d);
  json& j = r.doc();
  j["sieve"] = sw.valid();
  j["sieve_violations"] = sw.closure_violations;
  r.line("sieve hypothesis: " + ok(sw.valid()));
  for (const auto& v : sw.closure_violations) r.line("  " + v);
  if (!sw.valid()) {
    r.finish();
    return kFailure;
  }
  Quotient q = quotient(c, d);
  std::vector<std::string> objs;
  for (ObjIdx x : q.result.noninitial_objects()) objs.push_back(q.result.name(x));
  json covers = json::array();
  for (const auto& fam : q.result.declared_covers()) covers.push_back(describe(q.result, fam));
  j["objects"] = objs;
  j["covers"] = covers;
  j["k0"] = group_json(k0(q.result, budget).group());
  r.line("objects: " + std::to_string(objs.size()));
  for (const auto& n : objs) r.line("  " + n);
  r.line("declared covers: " + std::to_string(covers.size()));
  for (const auto& cov : covers) r.line("  " + cov.get<std::string>());
  r.line("K0(C\\D) = " + j["k0"]["text"].get<std::string>());
  if (!o.emit.empty()) {
    save_document(o.emit, emit_document(q.result));
    r.line("written " + o.emit);
  }
  r.finish();
  return kOk;
}

int cmd_devissage(const Options& o, Reporter& r, Budget& budget) {
  AssemblerDocument doc = load_document(o.file);
  const Assembler& c = doc.assembler;
  Subassembler s = full_subassembler(c, named_set(doc, o.sub));
  SubassemblerReport sr = is_subassembler(s, budget);
  json& j = r.doc();
  j["subassembler"] = sr.holds();
  j["subassembler_reasons"] = sr.reasons;
  r.line("subassembler: " + ok(sr.holds()));
  for (const auto& why : sr.reasons) r.line("  " + why);
  if (!sr.holds()) {
    r.finish();
    return kFailure;
  }
  DevissageReport d = devissage_check(c, s, budget);
  json witnesses = json::object();
  for (const auto& [x, fam] : d.witnesses) witnesses[c.name(x)] = describe(c, fam);
  json failures = json::array();
  for (ObjIdx x : d.failures) failures.push_back(c.name(x));
  j["hypothesis"] = d.hypothesis;
  j["witnesses"] = witnesses;
  j["hypothesis_failures"] = failures;
  r.line("hypothesis: " + ok(d.hypothesis) + " (" + std::to_string(d.witnesses.size()) +
         " objects covered from the subassembler)");
  for (const auto& [x, fam] : d.witnesses) r.line("  " + describe(c, fam));
  for (ObjIdx x : d.failures) r.line("  no cover from the subassembler: " + c.name(x));
  if (d.map) {
    std::string from = d.k0_sub->group().to_string(), to = d.k0_ambient->group().to_string();
    std::string verdict = d.map->is_iso() ? "iso" : "not iso";
    j["k0_sub"] = group_json(d.k0_sub->group());
    j["k0_ambient"] = group_json(d.k0_ambient->group());
    j["conclusion"] = d.conclusion();
    r.line("π₀: " + verdict + " " + from + "→" + to);
  }
  r.finish();
  return d.hypothesis && d.conclusion() ? kOk : kFailure;
}

int cmd_localize(const Options& o, Reporter& r, Budget& budget) {
  AssemblerDocument doc = load_document(o.file);
  const Assembler& c = doc.assembler;
  LocalizationReport l = localization_check(c, named_set(doc, o.sieve), budget);
  json& j = r.doc();
  j["sieve"] = l.sieve.valid();
  j["complements"] = l.complements;
  json fails = json::array();
  for (const auto& [x, f] : l.complement_failures) fails.push_back(c.mor_name(f));
  j["complement_failures"] = fails;
  r.line("sieve hypothesis: " + ok(l.sieve.valid()));
  for (const auto& v : l.sieve.closure_violations) r.line("  " + v);
  r.line("complements hypothesis: " + ok(l.complements));
  for (const auto& [x, f] : l.complement_failures) {
    r.line("  " + c.mor_name(f) + " (out of " + c.name(x) + ") lies in no finite disjoint covering family");
  }
  auto put = [&](const char* key, const char* label, const std::optional<K0Group>& g) {
    if (!g) return;
    j[key] = group_json(g->group());
    r.line(std::string(label) + " = " + g->group().to_string());
  };
  put("k0_sieve", "K0(D)", l.k0_sieve);
  put("k0_ambient", "K0(C)", l.k0_ambient);
  put("k0_quotient", "K0(C\\D)", l.k0_quotient);
  put("k0_cokernel", "coker(K0(D) -> K0(C))", l.k0_cokernel);
  j["exact"] = l.exact();
  r.line("π₀ exactness: " + ok(l.exact()));
  r.finish();
  return l.sieve.valid() && l.complements && l.exact() ? kOk : kFailure;
}

int cmd_sink_group(const Options& o, Reporter& r, Budget& budget) {
  AssemblerDocument doc = load_document(o.file);
  const Assembler& a = doc.assembler;
  SinkConditions cond = check_sink_conditions(a, budget);
  json& j = r.doc();
  j["S"] = cond.s;
  j["Ep"] = cond.ep;
  j["D"] = cond.d;
  j["violations"] = cond.violations;
  r.line("condition (S): " + ok(cond.s) + (cond.sink ? " (sink " + a.name(*cond.sink) + ")" : ""));
  r.line("condition (Ep): " + ok(cond.ep));
  r.line("condition (D): " + ok(cond.d));
  for (const auto& v : cond.violations) r.line("  " + v);
  if (!cond.all()) {
    r.finish();
    return kFailure;
  }
  SinkGroup g = sink_group(a, budget);
  Assembler sphere = sink_sphere(g);
  AssemblerMorphism p = sink_projection(g, default_sink_family(g), sphere);
  MorphismReport pr = check_assembler_morphism(p, budget);
  K0Hom h = k0_map(p, k0(a, budget), k0(sphere, budget));
  j["sink"] = a.name(g.sink);
  j["order"] = g.order();
  j["elements"] = g.table.names;
  j["table"] = g.table.mul;
  j["projection"] = pr.ok();
  j["k0_iso"] = h.is_iso();
  r.line("order: " + std::to_string(g.order()));
  for (std::size_t x = 0; x < g.order(); ++x) r.line("  g" + std::to_string(x) + " = " + g.table.names[x]);
  r.line("table (row * column):");
  for (const auto& row : g.table.mul) {
    std::string s = " ";
    for (std::size_t v : row) s += " g" + std::to_string(v);
    r.line(s);
  }
  r.line("projection to S_G: " + ok(pr.ok()));
  for (const auto& v : pr.violations) r.line("  " + v);
  r.line("π₀: " + std::string(h.is_iso() ? "iso" : "not iso"));
  r.finish();
  return pr.ok() && h.is_iso() ? kOk : kFailure;
}

int cmd_wcat(const Options& o, Reporter& r, Budget& budget) {
  AssemblerDocument doc = load_document(o.file);
  const Assembler& a = doc.assembler;
  std::optional<WCategory> holder;
  if (o.sieve.empty()) {
    holder.emplace(a, o.max_tuple, &budget);
  } else {
    holder.emplace(a, named_set(doc, o.sieve), o.max_tuple, &budget);
  }
  const WCategory& w = *holder;
  std::size_t morphisms = 0;
  for (std::size_t x = 0; x < w.objects().size(); ++x) {
    for (std::size_t y = 0; y < w.objects().size(); ++y) morphisms += w.hom(x, y).size();
  }
  WPropertiesReport props = check_w_properties(w, budget);
  Components comps = pi0_wcat(w);
  json& j = r.doc();
  j["max_tuple"] = o.max_tuple;
  j["objects"] = w.objects().size();
  j["morphisms"] = morphisms;
  j["monomorphisms"] = to_string(props.monomorphisms);
  j["squares"] = to_string(props.squares);
  j["components"] = comps.representatives.size();
  std::vector<std::string> reps;
  for (std::size_t i : comps.representatives) reps.push_back(w.describe(w.objects()[i]));
  j["representatives"] = reps;
  r.line("objects (tuples of length <= " + std::to_string(o.max_tuple) + "): " +
         std::to_string(w.objects().size()));
  r.line("morphisms: " + std::to_string(morphisms));
  r.line("all morphisms monic: " + std::string(to_string(props.monomorphisms)));
  r.line("cospans complete to squares: " + std::string(to_string(props.squares)));
  for (std::size_t i = 0; i < std::min<std::size_t>(props.failures.size(), 10); ++i) {
    r.line("  " + props.failures[i]);
  }
  r.line("components: " + std::to_string(comps.representatives.size()));
  for (const auto& s : reps) r.line("  " + s);
  r.finish();
  return props.monomorphisms == Verdict::kFails ? kFailure : kOk;
}

int cmd_homology(const Options& o, Reporter& r, Budget& budget) {
  AssemblerDocument doc = load_document(o.file);
  if (o.space != "level0" && o.space != "level1") throw InvalidInput("--space must be level0 or level1");
  std::size_t k = o.space == "level0" ? 0 : 1;
  TruncatedSimplicialSet x = diagonal_level_space(doc.assembler, k, o.degree, o.max_tuple, budget);
  ChainComplex c = normalized_chains(x);
  bool ids = check_simplicial_set(x).holds;
  bool dd = boundary_squared_zero(c);
  json& j = r.doc();
  j["simplices"] = x.counts;
  j["nondegenerate"] = c.ranks;
  j["identities"] = ids;
  j["boundary_squared_zero"] = dd;
  r.line("simplices per degree:");
  for (std::size_t n = 0; n < x.counts.size(); ++n) {
    r.line("  " + std::to_string(n) + ": " + std::to_string(x.counts[n]) + " (" +
           std::to_string(c.ranks[n]) + " nondegenerate)");
  }
  r.line("simplicial identities: " + ok(ids));
  r.line("boundary squared zero: " + ok(dd));
  json hs = json::array();
  for (std::size_t i = 0; i + 1 <= o.degree; ++i) {
    AbelianGroup h = homology(c, i);
    hs.push_back(group_json(h));
    r.line("H" + std::to_string(i) + " = " + h.to_string());
  }
  j["homology"] = hs;
  r.finish();
  return ids && dd ? kOk : kFailure;
}

int cmd_fixture(const Options& o, Reporter& r) {
  if (o.names.empty()) throw InvalidInput("fixture needs a name");
  std::vector<std::string> params(o.names.begin() + 1, o.names.end());
  NamedFixture fx = fixture(o.names[0], params);
  std::string text = emit_document(fx.assembler, fx.sieves);
  if (o.emit.empty()) {
    if (r.json_mode()) {
      r.doc() = json::parse(text);
      r.finish();
    } else {
      r.line(text.substr(0, text.size() - 1));
    }
    return kOk;
  }
  save_document(o.emit, text);
  r.doc()["written"] = o.emit;
  r.line("written " + o.emit);
  r.finish();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv(kBudgetVariable)) {
    try {
      o.budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: " << kBudgetVariable << " must be a positive integer\n";
      return kFormat;
    }
  }
  CLI::App app{"Finite assemblers: validation, K0, quotients, W-categories, homology"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget", o.budget, "step budget for searches");
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--seed", o.seed, "reserved; changes no result");

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "assembler document")->required();
    return c;
  };
  CLI::App* validate = file_cmd("validate", "category and axiom report");
  CLI::App* k0c = file_cmd("k0", "presentation, group and class table");
  CLI::App* sc = file_cmd("sc", "search for a scissors congruence witness");
  sc->add_option("objects", o.names, "two objects")->expected(2)->allow_extra_args(false)->required();
  sc->add_option("--depth", o.depth, "maximum pieces per family")->capture_default_str();
  CLI::App* quot = file_cmd("quotient", "the quotient by a named sieve");
  quot->add_option("--sieve", o.sieve, "named sieve in the document")->required();
  quot->add_option("--emit", o.emit, "write the quotient document");
  CLI::App* dev = file_cmd("devissage", "devissage hypothesis and K0 conclusion");
  dev->add_option("--sub", o.sub, "named object set of the subassembler")->required();
  CLI::App* loc = file_cmd("localize", "localization hypotheses and K0 exactness");
  loc->add_option("--sieve", o.sieve, "named sieve in the document")->required();
  CLI::App* sink = file_cmd("sink-group", "group of spans to the sink");
  CLI::App* wcat = file_cmd("wcat", "truncated W-category report");
  wcat->add_option("--max-tuple", o.max_tuple, "longest tuple kept")->capture_default_str();
  wcat->add_option("--sieve", o.sieve, "build W(C, D) for this sieve");
  CLI::App* hom = file_cmd("homology", "homology of a truncated level space");
  hom->add_option("--space", o.space, "simplicial level space")->capture_default_str()->check(CLI::IsMember({"level0", "level1"}));
  hom->add_option("--degree", o.degree, "top simplex dimension")->capture_default_str();
  hom->add_option("--max-tuple", o.max_tuple, "longest tuple kept")->capture_default_str();
  CLI::App* fix = app.add_subcommand("fixture", "emit a built-in assembler");
  fix->add_option("name", o.names, "fixture name and parameters")->required();
  fix->add_option("--emit", o.emit, "output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFormat;
  }

  Budget budget(o.budget);
  Reporter r(out, o.json);
  try {
    if (*validate) return cmd_validate(o, r, budget);
    if (*k0c) return cmd_k0(o, r, budget);
    if (*sc) return cmd_sc(o, r, budget);
    if (*quot) return cmd_quotient(o, r, budget);
    if (*dev) return cmd_devissage(o, r, budget);
    if (*loc) return cmd_localize(o, r, budget);
    if (*sink) return cmd_sink_group(o, r, budget);
    if (*wcat) return cmd_wcat(o, r, budget);
    if (*hom) return cmd_homology(o, r, budget);
    if (*fix) return cmd_fixture(o, r);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kFormat;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace scissors::cli
