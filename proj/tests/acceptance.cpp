// Acceptance gate: one PASS/FAIL line per criterion, each with a pinned time
// limit. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "pbc/autos.hpp"
#include "pbc/chains.hpp"
#include "pbc/cli.hpp"
#include "pbc/homology.hpp"
#include "pbc/matroid.hpp"
#include "pbc/pbcomplex.hpp"
#include "pbc/presentations.hpp"
#include "pbc/quillen.hpp"
#include "pbc/whitehead.hpp"

using namespace pbc;

namespace {

// Collects the first few failure messages of a criterion.
struct Log {
  std::vector<std::string> failures;
  std::size_t checks = 0;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool pass() const { return failures.empty(); }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Log&)> body;
};

// ---- 1

void presentation_suites(Log& log) {
  const auto run = [&](Theorem t, int n, int l) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = verify_presentation(t, theorem_families(t), n, l);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string tag = std::string(theorem_name(t)) + " n=" + std::to_string(n) + " l=" + std::to_string(l);
    log.check(r.checked > 0 || n == 1, tag + ": no instances");
    log.check(r.failures.empty(), tag + ": " + std::to_string(r.failures.size()) + " failures" +
                                      (r.failures.empty() ? "" : ", first " + format_instance(r.failures[0].instance)));
    log.check(r.skipped.empty(), tag + ": families skipped");
    log.check(s <= 60.0, tag + ": over 60 s");
  };
  for (int n = 1; n <= 3; ++n) run(Theorem::T2_1, n, 0);
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l <= 1; ++l) run(Theorem::T2_5, n, l);
  run(Theorem::T2_11, 3, 0);
  run(Theorem::T2_11, 4, 0);
  run(Theorem::T2_11, 4, 1);
}

// ---- 2

void omega_order(Log& log) {
  std::size_t expect = 1;
  for (int n = 1; n <= 4; ++n) {
    expect *= 2 * n;
    const auto omega = enumerate_omega(n);
    std::vector<std::vector<Word>> images;
    for (const auto& p : omega) images.push_back(Automorphism::from_token(Token::P(p), n).images());
    std::sort(images.begin(), images.end());
    const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
    log.check(omega.size() == expect && distinct,
              "n=" + std::to_string(n) + ": " + std::to_string(omega.size()) + " != " + std::to_string(expect));
  }
}

// ---- 3

Word from_raw(const oracle::RawWord& w, int n) {
  std::vector<Letter> xs;
  for (int x : w) xs.push_back(Letter(x));
  return Word::reduce(xs, n);
}

void oracle_agreement(Log& log) {
  for (auto [n, maxlen] : {std::pair{2, 4}, std::pair{3, 3}})
    for (std::size_t len = 1; len <= static_cast<std::size_t>(maxlen); ++len)
      for (const auto& raw : oracle::raw_words(n, len)) {
        const Word w = from_raw(raw, n);
        log.check(is_partial_basis({w}) == oracle::bfs_partial_basis({raw}, n), "disagree on " + format_word(w));
      }
  log.check(!is_partial_basis({parse_word("a a", 2)}), "a^2 accepted");
  log.check(!oracle::bfs_partial_basis({{1, 1}}, 2), "oracle accepts a^2");
  log.check(!is_partial_basis({parse_word("a b a^-1 b^-1", 2)}), "commutator accepted");
  log.check(!oracle::bfs_partial_basis({{1, 2, -1, -2}}, 2), "oracle accepts the commutator");
}

// ---- 4

void level_graph_checks(Log& log) {
  log.check(level_graph(parse_tuple("a", 2)).vertices.size() == 4, "(v1) in F2: vertex count");
  log.check(level_graph(parse_tuple("a, b", 2)).vertices.size() == 8, "(v1, v2) in F2: vertex count");
  for (auto [text, n] : {std::pair{"a", 2}, std::pair{"a, b", 2}, std::pair{"a", 3}}) {
    const auto u = parse_tuple(text, n);
    const auto p = stabilizer_presentation(u);
    const auto c = check_stabilizer(p);
    log.check(c.relator_failures == 0, std::string(text) + ": relator does not compose to the identity");
    log.check(c.generator_failures == 0, std::string(text) + ": generator moves the tuple");
    for (const auto& g : p.realized) log.check(g.apply(u) == u, std::string(text) + ": realized generator");
  }
}

// ---- 5

void homology_regressions(Log& log) {
  const auto s1 = reduced_homology(gen::boundary_of_simplex(2));
  log.check(s1.rank(1) == 1 && s1.zero_below(1) && s1.at(1).torsion.empty(), "boundary of a triangle");
  const auto s2 = reduced_homology(gen::boundary_of_simplex(3));
  log.check(s2.rank(2) == 1 && s2.zero_below(2) && s2.at(2).torsion.empty(), "boundary of a tetrahedron");
  const auto two = gen::two_points();
  const auto oct = reduced_homology(complex_join(complex_join(two, two), two));
  log.check(oct.rank(2) == 1 && oct.zero_below(2), "octahedron");
  const auto rp2 = reduced_homology(gen::projective_plane());
  log.check(rp2.at(0).zero() && rp2.at(1).rank == 0 && rp2.at(1).torsion == std::vector<BigInt>{2} && rp2.at(2).zero(),
            "projective plane");
  const auto t2 = reduced_homology(gen::torus7());
  log.check(t2.at(0).zero() && t2.rank(1) == 2 && t2.at(1).torsion.empty() && t2.rank(2) == 1 &&
                t2.at(2).torsion.empty(),
            "torus");
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = gen::random_complex(rng, 8);
    const auto c = augmented_chain_complex(k);
    log.check(boundaries_square_to_zero(c), "d o d != 0 on random complex " + std::to_string(trial));
    const auto h = homology(c);
    log.check(h.reduced_euler_characteristic() == k.euler_characteristic() - 1,
              "Euler characteristic on random complex " + std::to_string(trial));
  }
}

// ---- 6

void mapping_cylinders(Log& log) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const PosetMap f = gen::random_poset_map(rng, 10);
    const auto m = mapping_cylinder(f);
    log.check(reduced_homology(m.poset) == reduced_homology(f.target), "map " + std::to_string(trial));
  }
}

// ---- 7

void quillen_suite(Log& log) {
  const auto rep = run_quillen_suite(kDefaultSeed, 120);
  log.check(rep.instances.size() >= 100, "fewer than 100 instances");
  // Instances whose fibers all have vanishing top homology contribute no
  // products, so count the identity checks over the whole suite.
  std::size_t identity_checks = 0, with_products = 0;
  for (const auto& r : rep.instances) {
    identity_checks += r.identity_checks;
    with_products += r.identity_checks > 0;
  }
  log.check(with_products >= 50, "only " + std::to_string(with_products) + " instances exercise the chain identity");
  log.check(identity_checks > 0, "no chain identity checks");
  for (const auto& r : rep.instances) {
    const std::string tag = r.description + ": ";
    log.check(r.spherical == Verdict::yes, tag + "not a spherical map");
    log.check(r.heights && r.surjective && r.dimensions, tag + "height, surjectivity or dimension check");
    log.check(r.decomposition && r.source_rank == r.predicted_rank, tag + "rank identity");
    log.check(r.epimorphism && r.epimorphism_certificate, tag + "not an epimorphism");
    log.check(r.basis && (r.determinant == 1 || r.determinant == -1), tag + "not unimodular");
    log.check(r.identity_failures == 0, tag + "chain identity");
    log.check(r.pass(), tag + r.failure);
  }
}

// ---- 8

void pb_evidence(Log& log) {
  for (int L = 1; L <= 4; ++L) {
    const auto e = experiment_sphericity(2, L, {});
    const std::string tag = "n=2 L=" + std::to_string(L) + ": ";
    log.check(e.connected, tag + "disconnected");
    log.check(e.homology.at(0).zero(), tag + "H0 nonzero");
    log.check(e.homology.at(1).torsion.empty(), tag + "H1 torsion");
    log.check(e.label == kTruncatedEvidenceLabel, tag + "label");
  }
  const auto oct = experiment_sphericity(3, 1, {});
  log.check(oct.f_vector == std::vector<std::size_t>{6, 12, 8}, "n=3 L=1: f-vector");
  log.check(oct.homology.rank(2) == 1 && oct.homology.zero_below(2) && oct.homology.at(2).torsion.empty(),
            "n=3 L=1: octahedron homology");
  const auto link = experiment_sphericity(3, 1, {parse_word("a", 3)});
  log.check(link.connected && link.predicted_connected && link.connectivity_consistent, "n=3 B={v1} L=1: connected");
  log.check(link.label == kTruncatedEvidenceLabel, "link label");
}

// ---- 9

std::string run_to_string(std::vector<std::string> args) {
  args.insert(args.begin(), "pbc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str() + err.str();
}

void determinism(Log& log) {
  const std::vector<std::vector<std::string>> suites = {
      {"verify", "--theorem", "2.11", "--n", "3", "--l", "0"},
      {"verify", "--theorem", "2.5", "--n", "3", "--l", "1"},
      {"quillen", "suite", "--count", "20"},
      {"quillen", "suite", "--seed", "7", "--count", "20"},
      {"pb", "experiment", "--n", "2", "--L", "3"},
      {"pb", "build", "--n", "3", "--L", "1"},
      {"stabilizer", "--n", "2", "--tuple", "a, b"},
      {"minimize", "--n", "3", "--tuple", "a b c a^-1, b c"}};
  for (const auto& args : suites) {
    std::string label;
    for (const auto& a : args) label += a + " ";
    const std::string first = run_to_string(args);
    log.check(!first.empty(), label + ": empty report");
    log.check(first == run_to_string(args), label + ": reports differ");
    auto serial = args;
    serial.push_back("--serial");
    log.check(run_to_string(serial) == run_to_string(serial), label + "--serial: reports differ");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "presentation suites, each within 60 s", 60.0 * 12, presentation_suites},
      {2, "order of the signed permutation group", 60.0, omega_order},
      {3, "partial-basis oracle agreement", 120.0, oracle_agreement},
      {4, "level graph and stabilizer presentation", 60.0, level_graph_checks},
      {5, "homology regressions", 60.0, homology_regressions},
      {6, "mapping cylinder homology", 60.0, mapping_cylinders},
      {7, "spherical map suite", 300.0, quillen_suite},
      {8, "truncated partial-basis evidence", 120.0, pb_evidence},
      {9, "deterministic reports", 120.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(log);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = log.pass() && error.empty() && s <= c.limit_seconds;
    failed += !ok;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s criterion %d: %s (%zu checks, %.2f s, limit %.0f s)", ok ? "PASS" : "FAIL", c.id,
                  c.name, log.checks, s, c.limit_seconds);
    std::cout << buf << "\n";
    if (!error.empty()) std::cout << "    exception: " << error << "\n";
    if (s > c.limit_seconds) std::cout << "    over the time limit\n";
    for (const auto& f : log.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
  }
  std::cout << (failed ? "FAILED" : "ALL PASSED") << " (" << criteria.size() - failed << "/" << criteria.size() << ")\n";
  return failed;
}
