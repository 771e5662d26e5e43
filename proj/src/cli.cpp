#include "pbc/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "pbc/errors.hpp"
#include "pbc/json_io.hpp"
#include "pbc/matroid.hpp"
#include "pbc/pbcomplex.hpp"
#include "pbc/presentations.hpp"
#include "pbc/quillen.hpp"
#include "pbc/sphericity.hpp"
#include "pbc/whitehead.hpp"

namespace pbc {

const char* version_string() { return PBC_VERSION; }

namespace {

struct Outcome {
  int code = kExitOk;
  Json result;
};

struct Common {
  std::string json_path;
  bool serial = false;
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

const char* status_name(int code) {
  switch (code) {
    case kExitOk: return "ok";
    case kExitFailure: return "failed";
    case kExitBudget: return "budget_exhausted";
    default: return "malformed_input";
  }
}

Json envelope(const std::string& command, const Json& config, std::uint64_t seed, const Outcome& o) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "pbc";
  j["version"] = version_string();
  j["command"] = command;
  j["config"] = config;
  j["seed"] = seed;
  j["status"] = status_name(o.code);
  j["result"] = o.result;
  return j;
}

Json verdict_json(Verdict v) { return verdict_name(v); }

Json check_json(const NamedCheck& c) {
  Json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["witness"] = c.witness;
  return j;
}

int verdict_code(Verdict v) { return v == Verdict::yes ? kExitOk : v == Verdict::no ? kExitFailure : kExitBudget; }

// ---- verify

struct VerifyArgs {
  std::string theorem;
  int n = 0;
  int l = 0;
  std::vector<std::string> families;
  int max_table_rank = 4;
};

Outcome run_verify(const VerifyArgs& a, const Common& c) {
  const Theorem t = parse_theorem(a.theorem);
  std::vector<Family> fams;
  if (a.families.empty()) fams = theorem_families(t);
  for (const auto& f : a.families) fams.push_back(parse_family(f));
  PresentationOptions opt;
  opt.max_table_rank = a.max_table_rank;
  const auto rep = verify_presentation(t, fams, a.n, a.l, c.exec(), opt);
  Outcome o;
  o.result["theorem"] = theorem_name(t);
  o.result["checked"] = rep.checked;
  o.result["counts"] = Json::array();
  for (const auto& fc : rep.counts)
    o.result["counts"].push_back({{"family", family_name(fc.family)},
                                  {"instances", fc.instances},
                                  {"failures", fc.failures},
                                  {"consequence", is_consequence(fc.family)}});
  o.result["failures"] = Json::array();
  for (const auto& f : rep.failures)
    o.result["failures"].push_back({{"instance", format_instance(f.instance)}, {"reason", f.reason}});
  o.result["skipped"] = Json::array();
  for (Family f : rep.skipped) o.result["skipped"].push_back(family_name(f));
  o.result["pass"] = rep.pass();
  o.code = rep.pass() ? kExitOk : kExitFailure;
  return o;
}

// ---- whitehead-orbit

struct TupleArgs {
  int n = 0;
  std::string text;
  std::size_t vertex_budget = 1'000'000;
};

Outcome run_minimize(const TupleArgs& a) {
  const WordTuple u = parse_tuple(a.text, a.n);
  const auto m = minimize(u);
  Outcome o;
  o.result["input"] = tuple_to_json(u);
  o.result["input_text"] = format_tuple(u);
  o.result["minimal"] = tuple_to_json(m.tuple);
  o.result["minimal_text"] = format_tuple(m.tuple);
  o.result["input_length"] = total_length(u);
  o.result["minimal_length"] = total_length(m.tuple);
  o.result["steps"] = m.steps;
  o.result["certificate"] = automorphism_to_json(m.phi);
  o.result["certificate_checked"] = m.phi.apply(u) == m.tuple;
  return o;
}

Outcome run_decide(const TupleArgs& a) {
  const WordTuple s = parse_tuple(a.text, a.n);
  Outcome o;
  o.result["words"] = tuple_to_json(s);
  o.result["words_text"] = format_tuple(s);
  o.result["partial_basis"] = is_partial_basis(s.entries());
  return o;
}

Outcome run_extend(const TupleArgs& a) {
  const WordTuple s = parse_tuple(a.text, a.n);
  Outcome o;
  o.result["words"] = tuple_to_json(s);
  o.result["words_text"] = format_tuple(s);
  const bool pb = is_partial_basis(s.entries());
  o.result["partial_basis"] = pb;
  if (!pb) {
    o.result["certificate"] = nullptr;
    o.code = kExitFailure;
    return o;
  }
  const auto phi = extend_to_basis(s.entries());
  const auto set = s.canonical_set();
  bool ok = true;
  for (std::size_t i = 0; i < set.size(); ++i)
    ok &= phi.apply(set[i]) == Word::letter(Letter::gen(static_cast<int>(i) + 1), a.n);
  // The completed basis is phi^{-1}(v_1), ..., phi^{-1}(v_n).
  const auto inv = invert_auto(phi);
  Json basis = Json::array();
  for (int i = 1; i <= a.n; ++i) basis.push_back(format_word(inv.apply(Letter::gen(i))));
  o.result["certificate"] = automorphism_to_json(phi);
  o.result["basis"] = basis;
  o.result["certificate_checked"] = ok;
  o.code = ok ? kExitOk : kExitFailure;
  return o;
}

Outcome run_stabilizer(const TupleArgs& a, const Common& c) {
  const WordTuple u = parse_tuple(a.text, a.n);
  LevelGraphOptions opt;
  opt.vertex_budget = a.vertex_budget;
  const auto p = stabilizer_presentation(u, c.exec(), opt);
  const auto chk = check_stabilizer(p, c.exec());
  Outcome o;
  o.result["tuple"] = tuple_to_json(u);
  o.result["level_vertices"] = p.graph.vertices.size();
  o.result["level_edges"] = p.graph.edges.size();
  o.result["tree_edges"] = p.tree.size();
  Json gens = Json::array();
  for (std::size_t e = 0; e < p.realized.size(); ++e) {
    const auto& edge = p.graph.edges[e];
    gens.push_back({{"cell", e},
                    {"from", format_tuple(p.graph.vertices[edge.from])},
                    {"to", format_tuple(p.graph.vertices[edge.to])},
                    {"label", edge.label},
                    {"images", automorphism_to_json(p.realized[e])["images"]}});
  }
  o.result["generators"] = std::move(gens);
  Json rels = Json::array();
  for (const auto& r : p.relators) {
    Json rj = Json::array();
    for (auto [g, s] : r) rj.push_back({g, s});
    rels.push_back(std::move(rj));
  }
  o.result["relators"] = std::move(rels);
  o.result["tree_relators"] = p.tree_relators;
  o.result["relator_failures"] = chk.relator_failures;
  o.result["generator_failures"] = chk.generator_failures;
  o.result["pass"] = chk.pass();
  o.code = chk.pass() ? kExitOk : kExitFailure;
  return o;
}

// ---- homology

struct HomologyArgs {
  std::string complex_path;
  std::string poset_path;
};

Outcome run_homology(const HomologyArgs& a, const Common& c) {
  if (a.complex_path.empty() == a.poset_path.empty())
    throw InvalidArgument("give exactly one of --complex and --poset");
  HomologyResult h;
  Outcome o;
  if (!a.complex_path.empty()) {
    const auto k = complex_from_json(read_json_file(a.complex_path));
    h = reduced_homology(k, c.exec());
    o.result["vertices"] = k.vertex_count();
    o.result["dimension"] = k.dimension();
    o.result["euler_characteristic"] = k.euler_characteristic();
  } else {
    const auto p = poset_from_json(read_json_file(a.poset_path));
    h = reduced_homology(p, c.exec());
    o.result["elements"] = p.size();
    o.result["dimension"] = p.dimension();
  }
  o.result["homology"] = homology_to_json(h);
  o.result["text"] = format_homology(h);
  return o;
}

// ---- quillen

struct QuillenArgs {
  std::string map_path;
  std::string complex_path;
  int n = 0;
  bool homotopy = false;
  std::size_t pi1_budget = 200'000;
  std::size_t union_budget = 50'000'000;
  std::uint64_t seed = kDefaultSeed;
  std::size_t count = 100;
  double time_limit = 0;
};

Outcome run_quillen_check(const QuillenArgs& a, const Common& c) {
  const PosetMap f = map_from_json(read_json_file(a.map_path));
  SphericityOptions opt;
  opt.pi1_budget = a.pi1_budget;
  const auto r = check_spherical_map(f, a.n, !a.homotopy, c.exec(), opt);
  Outcome o;
  Json per = Json::array();
  for (const auto& v : r.per_y)
    per.push_back({{"y", f.target.labels()[v.y]},
                   {"height", v.height},
                   {"upper", verdict_json(v.upper)},
                   {"fiber", verdict_json(v.fiber)}});
  o.result["n"] = a.n;
  o.result["homological"] = !a.homotopy;
  o.result["per_y"] = std::move(per);
  o.result["overall"] = verdict_json(r.overall);
  o.result["checks"] = Json::array({check_json(r.heights), check_json(r.surjective), check_json(r.dimensions)});
  if (r.pass()) {
    try {
      const auto d = fiber_decomposition(f, a.n, c.exec());
      Json s = Json::array();
      for (const auto& x : d.summands)
        s.push_back({{"y", f.target.labels()[x.y]},
                     {"height", x.height},
                     {"fiber_rank", x.fiber_rank},
                     {"upper_rank", x.upper_rank}});
      o.result["decomposition"] = {{"target_rank", d.target_rank},
                                   {"summands", std::move(s)},
                                   {"predicted_rank", d.predicted_rank},
                                   {"source_rank", d.source_rank},
                                   {"holds", d.holds()}};
      if (!d.holds()) o.code = kExitFailure;
    } catch (const InvalidArgument& e) {
      o.result["decomposition"] = {{"skipped", e.what()}};
    }
  }
  if (o.code == kExitOk) o.code = verdict_code(r.overall);
  return o;
}

Json matrix_json(const Matrix& m) {
  Json j = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(bigint_to_json(x));
    j.push_back(std::move(r));
  }
  return j;
}

Outcome run_quillen_basis(const QuillenArgs& a) {
  const PosetMap f = map_from_json(read_json_file(a.map_path));
  const SimplicialComplex k = complex_from_json(read_json_file(a.complex_path));
  BasisOptions opt;
  opt.union_check_budget = a.union_budget;
  const auto cert = top_homology_basis(f, k, a.n, opt);
  Outcome o;
  o.result["n"] = a.n;
  o.result["hypotheses"] = {{"link_monotone", verdict_json(cert.link_monotone)},
                            {"union_compatible", verdict_json(cert.union_compatible)},
                            {"upper_epimorphisms", verdict_json(cert.upper_epimorphisms)},
                            {"witness", cert.hypothesis_witness}};
  o.result["epimorphism"] = cert.epimorphism;
  Json gamma = Json::array();
  for (const auto& g : cert.gamma) gamma.push_back(format_chain(g, &k));
  o.result["gamma"] = std::move(gamma);
  Json summands = Json::array();
  for (const auto& s : cert.summands) {
    Json x;
    x["y"] = f.target.labels()[s.y];
    x["height"] = s.height;
    Json sx = Json::array();
    for (int v : s.x) sx.push_back(k.label(v));
    x["x"] = std::move(sx);
    x["alpha"] = s.alpha.size();
    x["beta"] = s.beta.size();
    Json prods = Json::array();
    for (const auto& p : s.products) prods.push_back(format_chain(p, &k));
    x["products"] = std::move(prods);
    x["identity_checks"] = s.identity_checks;
    x["identity_failures"] = s.identity_failures;
    summands.push_back(std::move(x));
  }
  o.result["summands"] = std::move(summands);
  o.result["change_of_basis"] = matrix_json(cert.change_of_basis);
  o.result["determinant"] = bigint_to_json(cert.determinant);
  o.result["unimodular"] = cert.unimodular();
  o.result["failure"] = cert.failure;
  o.result["pass"] = cert.pass();
  if (cert.pass()) o.code = kExitOk;
  else if (cert.failure.empty() && (cert.link_monotone == Verdict::unknown || cert.union_compatible == Verdict::unknown ||
                                    cert.upper_epimorphisms == Verdict::unknown))
    o.code = kExitBudget;
  else o.code = kExitFailure;
  return o;
}

Json instance_json(const InstanceResult& r) {
  Json j;
  j["description"] = r.description;
  j["n"] = r.n;
  j["faces"] = r.faces;
  j["flats"] = r.flats;
  j["spherical"] = verdict_json(r.spherical);
  j["height_nondecreasing"] = r.heights;
  j["surjective"] = r.surjective;
  j["dimensions"] = r.dimensions;
  j["source_rank"] = r.source_rank;
  j["predicted_rank"] = r.predicted_rank;
  j["decomposition"] = r.decomposition;
  j["epimorphism"] = r.epimorphism;
  j["epimorphism_certificate"] = r.epimorphism_certificate;
  j["link_monotone"] = verdict_json(r.link_monotone);
  j["union_compatible"] = verdict_json(r.union_compatible);
  j["upper_epimorphisms"] = verdict_json(r.upper_epimorphisms);
  j["basis"] = r.basis;
  j["determinant"] = bigint_to_json(r.determinant);
  j["identity_checks"] = r.identity_checks;
  j["identity_failures"] = r.identity_failures;
  j["failure"] = r.failure;
  j["pass"] = r.pass();
  return j;
}

Outcome run_quillen_suite_cmd(const QuillenArgs& a, const Common& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto rep = run_quillen_suite(a.seed, a.count, c.exec());
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.result["count"] = rep.instances.size();
  o.result["passed"] = rep.passed();
  Json inst = Json::array();
  for (const auto& r : rep.instances) inst.push_back(instance_json(r));
  o.result["instances"] = std::move(inst);
  if (a.time_limit > 0 && elapsed > a.time_limit) {
    o.result["time_limit_exceeded"] = true;
    o.code = kExitBudget;
  } else {
    o.code = rep.passed() == rep.instances.size() ? kExitOk : kExitFailure;
  }
  return o;
}

// ---- pb

struct PBArgs {
  int n = 0;
  int length = 0;
  int skeleton = -1;
  std::string out_path;
  std::string basis;
  bool no_budget = false;
  std::size_t candidate_budget = 20'000'000;
  PBOptions options() const {
    PBOptions o;
    o.enforce_default_budget = !no_budget;
    o.candidate_budget = candidate_budget;
    return o;
  }
};

Json f_vector(const SimplicialComplex& k) {
  Json j = Json::array();
  for (int d = 0; d <= k.dimension(); ++d) j.push_back(k.count(d));
  return j;
}

Json words_json(const std::vector<Word>& ws) {
  Json j = Json::array();
  for (const Word& w : ws) j.push_back(format_word(w));
  return j;
}

Outcome run_pb_build(const PBArgs& a, const Common& c) {
  const int max_size = a.skeleton < 0 ? -1 : a.skeleton + 1;
  const auto t = build_truncated_pb(a.n, a.length, max_size, c.exec(), a.options());
  Outcome o;
  o.result["n"] = a.n;
  o.result["L"] = a.length;
  o.result["vertices"] = t.vertices.size();
  o.result["f_vector"] = f_vector(t.complex);
  o.result["dimension"] = t.complex.dimension();
  o.result["candidates_tested"] = t.candidates_tested;
  if (!a.out_path.empty()) write_json_file(a.out_path, complex_to_json(t.complex));
  else o.result["complex"] = complex_to_json(t.complex);
  return o;
}

Outcome run_pb_link(const PBArgs& a, const Common& c) {
  const auto b = parse_tuple(a.basis, a.n).entries();
  const auto t = link_in_pb(b, a.n, a.length, c.exec(), a.options());
  Outcome o;
  o.result["n"] = a.n;
  o.result["L"] = a.length;
  o.result["basis"] = words_json(WordTuple(a.n, b).canonical_set().entries());
  o.result["vertices"] = t.vertices.size();
  o.result["f_vector"] = f_vector(t.complex);
  o.result["dimension"] = t.complex.dimension();
  if (!a.out_path.empty()) write_json_file(a.out_path, complex_to_json(t.complex));
  else o.result["complex"] = complex_to_json(t.complex);
  return o;
}

Outcome run_pb_experiment(const PBArgs& a, const Common& c) {
  const auto b = a.basis.empty() ? std::vector<Word>{} : parse_tuple(a.basis, a.n).entries();
  const auto e = experiment_sphericity(a.n, a.length, b, c.exec(), a.options());
  Outcome o;
  o.result["label"] = e.label;
  o.result["n"] = e.rank;
  o.result["L"] = e.length_bound;
  o.result["basis"] = words_json(e.basis);
  o.result["observed"] = {{"vertices", e.vertices},
                          {"f_vector", e.f_vector},
                          {"dimension", e.dimension},
                          {"connected", e.connected},
                          {"homology", homology_to_json(e.homology)},
                          {"homology_text", format_homology(e.homology)}};
  o.result["predicted"] = {{"dimension", e.predicted_dimension},
                           {"connected", e.predicted_connected},
                           {"reduced_homology_below_top", "zero"},
                           {"top_degree", "torsion-free"}};
  o.result["consistency"] = {{"dimension", e.dimension_consistent},
                             {"connectivity", e.connectivity_consistent},
                             {"lower_homology_vanishes", e.lower_homology_vanishes},
                             {"top_torsion_free", e.top_torsion_free}};
  return o;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial-basis complexes, Whitehead automorphisms and poset fibrations"};
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);

  Common common;
  std::uint64_t seed = kDefaultSeed;
  std::string command;
  Json config;
  std::function<Outcome()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", common.json_path, "Write the report to this path");
    sub->add_flag("--serial", common.serial, "Use the serial reference kernels");
  };

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check every instance of a relation family");
  verify->add_option("--theorem", va.theorem, "2.1, 2.4, 2.5, 2.7, 2.9, 2.10 or 2.11")->required();
  verify->add_option("--n", va.n, "Rank")->required()->check(CLI::Range(1, 8));
  verify->add_option("--l", va.l, "Number of fixed generators")->check(CLI::NonNegativeNumber);
  verify->add_option("--families", va.families, "Restrict to these families")->delimiter(',');
  verify->add_option("--max-table-rank", va.max_table_rank, "Rank cap for multiplication tables");
  add_common(verify);
  verify->callback([&] {
    command = "verify";
    config = {{"theorem", va.theorem}, {"n", va.n}, {"l", va.l}, {"families", va.families},
              {"max_table_rank", va.max_table_rank}, {"serial", common.serial}};
    action = [&] { return run_verify(va, common); };
  });

  TupleArgs ta;
  auto tuple_cmd = [&](const char* name, const char* help, const char* flag, bool budget) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--n", ta.n, "Rank")->required()->check(CLI::Range(1, 26));
    sub->add_option(flag, ta.text, "Comma-separated words")->required();
    if (budget) sub->add_option("--vertex-budget", ta.vertex_budget, "Level-graph vertex cap")->check(CLI::PositiveNumber);
    add_common(sub);
    return sub;
  };
  auto tuple_config = [&](const char* flag) {
    Json j = {{"n", ta.n}, {flag, ta.text}, {"serial", common.serial}};
    return j;
  };
  tuple_cmd("minimize", "Minimize a tuple under Whitehead automorphisms", "--tuple", false)->callback([&] {
    command = "minimize";
    config = tuple_config("tuple");
    action = [&] { return run_minimize(ta); };
  });
  tuple_cmd("decide-basis", "Decide whether words form a partial basis", "--words", false)->callback([&] {
    command = "decide-basis";
    config = tuple_config("words");
    action = [&] { return run_decide(ta); };
  });
  tuple_cmd("extend-basis", "Extend a partial basis to a basis", "--words", false)->callback([&] {
    command = "extend-basis";
    config = tuple_config("words");
    action = [&] { return run_extend(ta); };
  });
  tuple_cmd("stabilizer", "Stabilizer presentation of a minimal tuple", "--tuple", true)->callback([&] {
    command = "stabilizer";
    config = tuple_config("tuple");
    config["vertex_budget"] = ta.vertex_budget;
    action = [&] { return run_stabilizer(ta, common); };
  });

  HomologyArgs ha;
  auto* hom = app.add_subcommand("homology", "Reduced integral homology of a complex or poset");
  hom->add_option("--complex", ha.complex_path, "Complex JSON");
  hom->add_option("--poset", ha.poset_path, "Poset JSON");
  add_common(hom);
  hom->callback([&] {
    command = "homology";
    config = {{"complex", ha.complex_path}, {"poset", ha.poset_path}, {"serial", common.serial}};
    action = [&] { return run_homology(ha, common); };
  });

  QuillenArgs qa;
  auto* quillen = app.add_subcommand("quillen", "Spherical maps of posets");
  quillen->require_subcommand(1);
  auto* qcheck = quillen->add_subcommand("check", "Per-element sphericity verdicts and the rank decomposition");
  qcheck->add_option("--map", qa.map_path, "Map JSON")->required();
  qcheck->add_option("--n", qa.n, "Dimension")->required();
  qcheck->add_flag("--homotopy", qa.homotopy, "Use the budgeted simple-connectivity check");
  qcheck->add_option("--pi1-budget", qa.pi1_budget, "Relator-length cap")->check(CLI::PositiveNumber);
  add_common(qcheck);
  qcheck->callback([&] {
    command = "quillen check";
    config = {{"map", qa.map_path}, {"n", qa.n}, {"homotopy", qa.homotopy}, {"pi1_budget", qa.pi1_budget},
              {"serial", common.serial}};
    action = [&] { return run_quillen_check(qa, common); };
  });
  auto* qbasis = quillen->add_subcommand("basis", "Constructive basis of top homology");
  qbasis->add_option("--map", qa.map_path, "Map JSON on the face poset of the complex")->required();
  qbasis->add_option("--complex", qa.complex_path, "Complex JSON")->required();
  qbasis->add_option("--n", qa.n, "Dimension")->required();
  qbasis->add_option("--union-budget", qa.union_budget, "Cap for the union-compatibility check")
      ->check(CLI::PositiveNumber);
  add_common(qbasis);
  qbasis->callback([&] {
    command = "quillen basis";
    config = {{"map", qa.map_path}, {"complex", qa.complex_path}, {"n", qa.n}, {"union_budget", qa.union_budget}};
    action = [&] { return run_quillen_basis(qa); };
  });
  auto* qsuite = quillen->add_subcommand("suite", "Generated admissible instances");
  qsuite->add_option("--seed", qa.seed, "Generator seed");
  qsuite->add_option("--count", qa.count, "Number of instances")->check(CLI::PositiveNumber);
  qsuite->add_option("--time-limit", qa.time_limit, "Seconds; exceeded limits exit 2");
  add_common(qsuite);
  qsuite->callback([&] {
    command = "quillen suite";
    seed = qa.seed;
    config = {{"count", qa.count}, {"time_limit", qa.time_limit}, {"serial", common.serial}};
    action = [&] { return run_quillen_suite_cmd(qa, common); };
  });

  PBArgs pa;
  auto* pb = app.add_subcommand("pb", "Length-truncated partial-basis complexes");
  pb->require_subcommand(1);
  auto pb_cmd = [&](const char* name, const char* help) {
    auto* sub = pb->add_subcommand(name, help);
    sub->add_option("--n", pa.n, "Rank")->required()->check(CLI::Range(1, 26));
    sub->add_option("--L", pa.length, "Word-length bound")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--no-budget", pa.no_budget, "Lift the default (n, L) budget");
    sub->add_option("--candidate-budget", pa.candidate_budget, "Cap on tested candidate sets")
        ->check(CLI::PositiveNumber);
    add_common(sub);
    return sub;
  };
  auto pb_config = [&] {
    return Json{{"n", pa.n}, {"L", pa.length}, {"skeleton", pa.skeleton}, {"basis", pa.basis},
                {"no_budget", pa.no_budget}, {"candidate_budget", pa.candidate_budget}, {"serial", common.serial}};
  };
  auto* pbuild = pb_cmd("build", "Build the truncated complex");
  pbuild->add_option("--skeleton", pa.skeleton, "Keep simplices up to this dimension");
  pbuild->add_option("--out", pa.out_path, "Write the complex JSON here");
  pbuild->callback([&] {
    command = "pb build";
    config = pb_config();
    config["out"] = pa.out_path;
    action = [&] { return run_pb_build(pa, common); };
  });
  auto* plink = pb_cmd("link", "Link of a partial basis");
  plink->add_option("--basis", pa.basis, "Comma-separated words")->required();
  plink->add_option("--out", pa.out_path, "Write the complex JSON here");
  plink->callback([&] {
    command = "pb link";
    config = pb_config();
    config["out"] = pa.out_path;
    action = [&] { return run_pb_link(pa, common); };
  });
  auto* pexp = pb_cmd("experiment", "Observed and predicted sphericity of a truncated link");
  pexp->add_option("--basis", pa.basis, "Comma-separated words (empty: the whole complex)");
  pexp->callback([&] {
    command = "pb experiment";
    config = pb_config();
    action = [&] { return run_pb_experiment(pa, common); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << version_string() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  Outcome o;
  try {
    o = action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const BudgetExceeded& e) {
    o.code = kExitBudget;
    o.result = {{"error", e.what()}};
  }
  const Json report = envelope(command, config, seed, o);
  try {
    if (!common.json_path.empty()) {
      write_json_file(common.json_path, report);
      out << command << ": " << status_name(o.code) << "\n";
    } else {
      out << dump_json(report);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return o.code;
}

}  // namespace pbc
