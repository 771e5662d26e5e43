#include "pbc/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "pbc/errors.hpp"

namespace pbc {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& path) { throw ParseError(what, path); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad("expected an object", path);
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'", path);
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) bad("expected an array", path);
  return j;
}

long long integer_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad("expected an integer", path);
  return j.get<long long>();
}

std::string label_of(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad("expected a string or integer label", path);
}

std::map<std::string, int> index_labels(const std::vector<std::string>& labels, const std::string& path) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!idx.emplace(labels[i], static_cast<int>(i)).second)
      bad("duplicate label '" + labels[i] + "'", path + "/" + std::to_string(i));
  return idx;
}

int lookup(const std::map<std::string, int>& idx, const Json& j, const std::string& path) {
  const std::string l = label_of(j, path);
  auto it = idx.find(l);
  if (it == idx.end()) bad("unknown label '" + l + "'", path);
  return it->second;
}

std::vector<std::string> labels_from(const Json& arr, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < array_at(arr, path).size(); ++i)
    out.push_back(label_of(arr[i], path + "/" + std::to_string(i)));
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    // Drop the library's "[json.exception.parse_error.101] " prefix.
    if (auto p = msg.find("] "); p != std::string::npos) msg = msg.substr(p + 2);
    throw ParseError("malformed JSON: " + msg, e.byte);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << dump_json(j);
}

Json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Json word_to_json(const Word& w) {
  Json a = Json::array();
  for (Letter x : w.letters()) a.push_back(x.code());
  return a;
}

Word word_from_json(const Json& j, int rank, const std::string& path) {
  std::vector<Letter> xs;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    const long long c = integer_at(j[i], p);
    if (c == 0 || c > rank || c < -rank) bad("letter " + std::to_string(c) + " outside rank " + std::to_string(rank), p);
    xs.push_back(Letter(static_cast<int>(c)));
  }
  return Word::reduce(xs, rank);
}

namespace {

int rank_from(const Json& j) {
  const long long n = integer_at(field(j, "rank", ""), "/rank");
  if (n < 1 || n > 26) bad("rank must lie in 1..26", "/rank");
  return static_cast<int>(n);
}

}  // namespace

Json tuple_to_json(const WordTuple& t) {
  Json j;
  j["rank"] = t.rank();
  j["words"] = Json::array();
  for (const Word& w : t.entries()) j["words"].push_back(word_to_json(w));
  return j;
}

WordTuple tuple_from_json(const Json& j) {
  const int n = rank_from(j);
  const Json& ws = array_at(field(j, "words", ""), "/words");
  std::vector<Word> out;
  for (std::size_t i = 0; i < ws.size(); ++i) out.push_back(word_from_json(ws[i], n, "/words/" + std::to_string(i)));
  return WordTuple(n, std::move(out));
}

Json automorphism_to_json(const Automorphism& f) {
  Json j;
  j["rank"] = f.rank();
  j["images"] = Json::array();
  for (const Word& w : f.images()) j["images"].push_back(word_to_json(w));
  j["factorization"] = Json::array();
  if (f.has_factorization())
    for (const Token& t : f.factorization()) j["factorization"].push_back(format_token(t));
  return j;
}

Automorphism automorphism_from_json(const Json& j) {
  const int n = rank_from(j);
  const Json& imgs = array_at(field(j, "images", ""), "/images");
  if (imgs.size() != static_cast<std::size_t>(n)) bad("expected one image per generator", "/images");
  std::vector<Word> images;
  for (std::size_t i = 0; i < imgs.size(); ++i) images.push_back(word_from_json(imgs[i], n, "/images/" + std::to_string(i)));
  Automorphism f = Automorphism::from_images(n, images);
  auto it = j.find("factorization");
  if (it == j.end() || it->empty()) return f;
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < array_at(*it, "/factorization").size(); ++i) {
    const std::string p = "/factorization/" + std::to_string(i);
    if (!(*it)[i].is_string()) bad("expected a token string", p);
    try {
      tokens.push_back(parse_token((*it)[i].get<std::string>(), n));
    } catch (const ParseError& e) {
      bad(e.what(), p);
    } catch (const InvalidArgument& e) {
      bad(e.what(), p);
    }
  }
  if (!(Automorphism::from_tokens(tokens, n) == f)) bad("factorization does not compose to the images", "/factorization");
  return f.with_factorization(std::move(tokens));
}

Json complex_to_json(const SimplicialComplex& k) {
  Json j;
  j["vertices"] = k.labels();
  j["facets"] = Json::array();
  for (const Simplex& s : k.facets()) {
    Json f = Json::array();
    for (int v : s) f.push_back(k.label(v));
    j["facets"].push_back(std::move(f));
  }
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  std::vector<std::string> labels = labels_from(field(j, "vertices", ""), "/vertices");
  const auto idx = index_labels(labels, "/vertices");
  const Json& fs = array_at(field(j, "facets", ""), "/facets");
  std::vector<Simplex> faces;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string p = "/facets/" + std::to_string(i);
    Simplex s;
    for (std::size_t t = 0; t < array_at(fs[i], p).size(); ++t)
      s.push_back(lookup(idx, fs[i][t], p + "/" + std::to_string(t)));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) bad("repeated vertex in facet", p);
    if (!s.empty()) faces.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(labels), faces);
}

Json poset_to_json(const FinitePoset& p) {
  Json j;
  j["elements"] = p.labels();
  j["relations"] = Json::array();
  for (auto [a, b] : p.cover_relations()) j["relations"].push_back({p.labels()[a], p.labels()[b]});
  return j;
}

FinitePoset poset_from_json(const Json& j) {
  std::vector<std::string> labels = labels_from(field(j, "elements", ""), "/elements");
  const auto idx = index_labels(labels, "/elements");
  std::vector<std::pair<int, int>> rel;
  auto it = j.find("relations");
  if (it != j.end()) {
    for (std::size_t i = 0; i < array_at(*it, "/relations").size(); ++i) {
      const std::string p = "/relations/" + std::to_string(i);
      const Json& r = (*it)[i];
      if (!r.is_array() || r.size() != 2) bad("expected a pair [a, b]", p);
      rel.emplace_back(lookup(idx, r[0], p + "/0"), lookup(idx, r[1], p + "/1"));
    }
  }
  try {
    return FinitePoset(std::move(labels), rel);
  } catch (const InvalidArgument& e) {
    bad(e.what(), "/relations");
  }
}

Json map_to_json(const PosetMap& f) {
  Json j;
  j["source"] = poset_to_json(f.source);
  j["target"] = poset_to_json(f.target);
  Json a = Json::object();
  for (std::size_t x = 0; x < f.assignment.size(); ++x) a[f.source.labels()[x]] = f.target.labels()[f.assignment[x]];
  j["assignment"] = std::move(a);
  return j;
}

PosetMap map_from_json(const Json& j) {
  FinitePoset x, y;
  try {
    x = poset_from_json(field(j, "source", ""));
  } catch (const ParseError& e) {
    bad(e.what(), "/source");
  }
  try {
    y = poset_from_json(field(j, "target", ""));
  } catch (const ParseError& e) {
    bad(e.what(), "/target");
  }
  const Json& a = field(j, "assignment", "");
  if (!a.is_object()) bad("expected an object", "/assignment");
  const auto xi = index_labels(x.labels(), "/source/elements");
  const auto yi = index_labels(y.labels(), "/target/elements");
  std::vector<int> f(x.size(), -1);
  for (auto it = a.begin(); it != a.end(); ++it) {
    const std::string p = "/assignment/" + it.key();
    auto xs = xi.find(it.key());
    if (xs == xi.end()) bad("unknown source element '" + it.key() + "'", p);
    f[xs->second] = lookup(yi, it.value(), p);
  }
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] < 0) bad("source element '" + x.labels()[i] + "' is unassigned", "/assignment");
  try {
    return PosetMap(std::move(x), std::move(y), std::move(f));
  } catch (const InvalidArgument& e) {
    bad(e.what(), "/assignment");
  }
}

Json homology_to_json(const HomologyResult& h) {
  Json j;
  j["degrees"] = Json::array();
  for (const auto& d : h.degrees) {
    Json e;
    e["degree"] = d.degree;
    e["rank"] = d.rank;
    e["torsion"] = Json::array();
    for (const BigInt& t : d.torsion) e["torsion"].push_back(bigint_to_json(t));
    j["degrees"].push_back(std::move(e));
  }
  return j;
}

}  // namespace pbc
