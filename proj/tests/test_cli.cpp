#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pbc/cli.hpp"
#include "pbc/errors.hpp"
#include "pbc/json_io.hpp"
#include "pbc/pbcomplex.hpp"

using namespace pbc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pbc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PBC_TEST_DATA) + "/" + name; }

std::string temp_path(const std::string& name) { return "pbc_test_" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("json syntax errors carry a byte offset") {
  try {
    parse_json("{\"a\": [1, 2}");
    FAIL("no throw");
  } catch (const ParseError& e) {
    // One past the offending byte.
    CHECK(e.position() == 12);
  }
  CHECK_THROWS_AS(parse_json(""), ParseError);
}

TEST_CASE("json structural errors name the offending value") {
  try {
    complex_from_json(parse_json(R"({"vertices": [0, 1], "facets": [[0, 7]]})"));
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/facets/0/1") != std::string::npos);
  }
  CHECK_THROWS_AS(complex_from_json(parse_json(R"({"vertices": [0, 0], "facets": []})")), ParseError);
  CHECK_THROWS_AS(complex_from_json(parse_json(R"({"facets": []})")), ParseError);
  CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements": ["a", "b"], "relations": [["a", "b"], ["b", "a"]]})")),
                  ParseError);
  CHECK_THROWS_AS(word_from_json(parse_json("[1, 3]"), 2), ParseError);
}

TEST_CASE("json round trips") {
  const auto k = complex_from_json(read_json_file(data("boundary-delta3.json")));
  CHECK(complex_to_json(k) == complex_to_json(complex_from_json(complex_to_json(k))));
  const auto f = map_from_json(read_json_file(data("four_over_two.json")));
  const auto g = map_from_json(map_to_json(f));
  CHECK(g.assignment == f.assignment);
  CHECK(g.target.labels() == f.target.labels());

  const WordTuple t = parse_tuple("a b a^-1, b^-1", 2);
  CHECK(tuple_from_json(tuple_to_json(t)) == t);
  const auto phi = Automorphism::from_tokens({parse_token("W({v1,v2};v1)", 2), parse_token("E(v1,v2)", 2)}, 2);
  CHECK(automorphism_from_json(automorphism_to_json(phi)) == phi);
  auto j = automorphism_to_json(phi);
  j["factorization"] = Json::array({"E(v1,v2)"});
  CHECK_THROWS_AS(automorphism_from_json(j), ParseError);

  CHECK(bigint_to_json(BigInt(-7)) == Json(-7));
  const BigInt huge = BigInt(1) << 80;
  CHECK(bigint_to_json(huge) == Json(huge.str()));
}

TEST_CASE("verify exits 0 on the full relation suite") {
  const auto r = run({"verify", "--theorem", "2.11", "--n", "3", "--l", "0"});
  CHECK(r.code == kExitOk);
  const Json j = parse_json(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["result"]["pass"] == true);
  CHECK(j["result"]["failures"].empty());
  CHECK(j["schema_version"] == kSchemaVersion);
}

TEST_CASE("decide-basis on the commutator") {
  const auto r = run({"decide-basis", "--n", "2", "--words", "a b a^-1 b^-1"});
  CHECK(r.code == kExitOk);
  CHECK(parse_json(r.out)["result"]["partial_basis"] == false);
  const auto yes = run({"decide-basis", "--n", "2", "--words", "a b, b"});
  CHECK(parse_json(yes.out)["result"]["partial_basis"] == true);
}

TEST_CASE("extend-basis") {
  const auto r = run({"extend-basis", "--n", "3", "--words", "a b"});
  CHECK(r.code == kExitOk);
  const Json j = parse_json(r.out);
  CHECK(j["result"]["certificate_checked"] == true);
  CHECK(j["result"]["basis"].size() == 3);
  CHECK(run({"extend-basis", "--n", "2", "--words", "a b a^-1 b^-1"}).code == kExitFailure);
}

TEST_CASE("minimize and stabilizer") {
  const auto m = run({"minimize", "--n", "2", "--tuple", "a b a b^-1 a^-1"});
  CHECK(m.code == kExitOk);
  const Json j = parse_json(m.out);
  CHECK(j["result"]["minimal_length"] == 1);
  CHECK(j["result"]["certificate_checked"] == true);

  const auto s = run({"stabilizer", "--n", "2", "--tuple", "a"});
  CHECK(s.code == kExitOk);
  CHECK(parse_json(s.out)["result"]["level_vertices"] == 4);
  CHECK(run({"stabilizer", "--n", "2", "--tuple", "a", "--vertex-budget", "2"}).code == kExitBudget);
}

TEST_CASE("homology of the boundary of a tetrahedron") {
  const auto r = run({"homology", "--complex", data("boundary-delta3.json")});
  CHECK(r.code == kExitOk);
  const Json j = parse_json(r.out);
  for (const auto& d : j["result"]["homology"]["degrees"])
    CHECK(d["rank"] == (d["degree"] == 2 ? 1 : 0));
  CHECK(j["result"]["text"] == "H2 = Z");
  CHECK(parse_json(run({"homology", "--poset", data("chain_poset.json")}).out)["result"]["text"] == "acyclic");
}

TEST_CASE("malformed input exits 3 with a position") {
  const auto r = run({"homology", "--complex", data("malformed.json")});
  CHECK(r.code == kExitMalformed);
  CHECK(r.out.empty());
  CHECK(r.err.find("position") != std::string::npos);
  CHECK(run({"homology", "--complex", data("missing.json")}).code == kExitMalformed);
  CHECK(run({"decide-basis", "--n", "2", "--words", "a c"}).code == kExitMalformed);
  CHECK(run({"verify", "--theorem", "9.9", "--n", "2"}).code == kExitMalformed);
  CHECK(run({"verify", "--n", "2"}).code == kExitMalformed);
  CHECK(run({}).code == kExitMalformed);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("quillen commands") {
  const auto c = run({"quillen", "check", "--map", data("four_over_two.json"), "--n", "0"});
  CHECK(c.code == kExitOk);
  const Json cj = parse_json(c.out);
  CHECK(cj["result"]["overall"] == "yes");
  CHECK(cj["result"]["decomposition"]["predicted_rank"] == 3);
  CHECK(cj["result"]["decomposition"]["holds"] == true);

  const auto b =
      run({"quillen", "basis", "--map", data("four_over_two.json"), "--complex", data("four_points.json"), "--n", "0"});
  CHECK(b.code == kExitOk);
  const Json bj = parse_json(b.out);
  CHECK(bj["result"]["unimodular"] == true);
  CHECK(bj["result"]["gamma"].size() == 1);

  const auto s = run({"quillen", "suite", "--seed", "5", "--count", "10"});
  CHECK(s.code == kExitOk);
  CHECK(parse_json(s.out)["result"]["passed"] == 10);
}

TEST_CASE("pb commands") {
  const std::string out = temp_path("octahedron.json");
  const auto b = run({"pb", "build", "--n", "3", "--L", "1", "--out", out});
  CHECK(b.code == kExitOk);
  CHECK(parse_json(b.out)["result"]["f_vector"] == Json::array({6, 12, 8}));
  const auto k = complex_from_json(read_json_file(out));
  CHECK(k.vertex_count() == 6);
  std::remove(out.c_str());

  const auto sk = run({"pb", "build", "--n", "3", "--L", "1", "--skeleton", "1"});
  CHECK(parse_json(sk.out)["result"]["f_vector"] == Json::array({6, 12}));

  const auto l = run({"pb", "link", "--n", "3", "--L", "1", "--basis", "a"});
  CHECK(parse_json(l.out)["result"]["f_vector"] == Json::array({4, 4}));

  const auto e = run({"pb", "experiment", "--n", "3", "--L", "1", "--basis", "a"});
  CHECK(e.code == kExitOk);
  const Json ej = parse_json(e.out);
  CHECK(ej["result"]["label"] == std::string(kTruncatedEvidenceLabel));
  CHECK(ej["result"]["observed"]["connected"] == true);
  CHECK(ej["result"]["consistency"]["connectivity"] == true);

  CHECK(run({"pb", "build", "--n", "3", "--L", "5"}).code == kExitBudget);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string a = temp_path("a.json"), b = temp_path("b.json");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--theorem", "2.5", "--n", "2", "--l", "1"},
           {"quillen", "suite", "--seed", "11", "--count", "8"},
           {"pb", "experiment", "--n", "2", "--L", "2"}}) {
    auto x = args, y = args;
    x.insert(x.end(), {"--json", a});
    y.insert(y.end(), {"--json", b});
    REQUIRE(run(x).code == kExitOk);
    REQUIRE(run(y).code == kExitOk);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
  }
  std::remove(a.c_str());
  std::remove(b.c_str());
}
