#include "pbc/pbcomplex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "pbc/errors.hpp"
#include "pbc/whitehead.hpp"

namespace pbc {

const char* const kTruncatedEvidenceLabel = "truncated evidence — the theorem concerns the untruncated complex";

bool within_default_budget(int n, int length_bound) {
  if (n <= 3) return length_bound <= 4;
  if (n == 4) return length_bound <= 2;
  return false;
}

bool PartialBasisMemo::test(const std::vector<Word>& words) {
  const int rank = words.empty() ? 0 : words.front().rank();
  WordTuple key = WordTuple(rank, words).canonical_set();
  {
    std::lock_guard<std::mutex> lock(mu_);
    ++lookups_;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const bool v = is_partial_basis(key.entries());
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::move(key), v);
  return v;
}

std::size_t PartialBasisMemo::lookups() const {
  std::lock_guard<std::mutex> lock(mu_);
  return lookups_;
}

std::size_t PartialBasisMemo::computed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

namespace {

void check_args(int n, int length_bound, const PBOptions& opt) {
  if (n < 1) throw InvalidArgument("rank must be positive");
  if (length_bound < 1) throw InvalidArgument("length bound must be at least 1");
  if (opt.enforce_default_budget && !within_default_budget(n, length_bound))
    throw BudgetExceeded("(n, L) outside the default budget (n <= 3 with L <= 4, n = 4 with L <= 2)");
}

std::vector<Word> words_up_to(int n, int length_bound) {
  std::vector<Word> out;
  for (int len = 1; len <= length_bound; ++len) {
    auto w = all_reduced_words(n, static_cast<std::size_t>(len));
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

// Level-wise closure: a (k+1)-set is a candidate when all its k-subsets
// passed; candidates at one level are tested concurrently.
template <class Test>
std::vector<Simplex> apriori(int vertex_count, int max_size, Exec exec, std::size_t budget, std::size_t& tested,
                             Test&& test) {
  std::vector<Simplex> all;
  std::vector<Simplex> level;
  for (int v = 0; v < vertex_count; ++v) level.push_back({v});
  all = level;
  for (int size = 2; size <= max_size && !level.empty(); ++size) {
    std::unordered_set<Simplex, SimplexHash> prev(level.begin(), level.end());
    std::vector<Simplex> candidates;
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        if (!std::equal(level[i].begin(), level[i].end() - 1, level[j].begin())) break;
        Simplex c = level[i];
        c.push_back(level[j].back());
        bool ok = true;
        Simplex face(c.size() - 1);
        for (std::size_t drop = 0; drop + 2 < c.size() && ok; ++drop) {
          std::size_t p = 0;
          for (std::size_t q = 0; q < c.size(); ++q)
            if (q != drop) face[p++] = c[q];
          ok = prev.count(face) > 0;
        }
        if (ok) candidates.push_back(std::move(c));
      }
    }
    tested += candidates.size();
    if (tested > budget) throw BudgetExceeded("candidate budget exceeded while building the truncated complex");
    std::vector<char> pass(candidates.size(), 0);
    const long total = static_cast<long>(candidates.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
      for (long i = 0; i < total; ++i) pass[i] = test(candidates[i]) ? 1 : 0;
    } else {
      for (long i = 0; i < total; ++i) pass[i] = test(candidates[i]) ? 1 : 0;
    }
    level.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (pass[i]) level.push_back(std::move(candidates[i]));
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

TruncatedPB assemble(int n, int length_bound, std::vector<Word> vertices, const std::vector<Simplex>& simplices,
                     std::size_t tested) {
  TruncatedPB t;
  t.rank = n;
  t.length_bound = length_bound;
  std::vector<std::string> labels;
  for (const Word& w : vertices) labels.push_back(format_word(w));
  t.vertices = std::move(vertices);
  t.complex = SimplicialComplex(std::move(labels), simplices);
  t.candidates_tested = tested;
  return t;
}

}  // namespace

std::vector<Word> enumerate_primitives(int n, int length_bound, Exec exec) {
  if (n < 1) throw InvalidArgument("rank must be positive");
  if (length_bound < 1) throw InvalidArgument("length bound must be at least 1");
  const auto words = words_up_to(n, length_bound);
  std::vector<char> prim(words.size(), 0);
  const long total = static_cast<long>(words.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < total; ++i) prim[i] = is_primitive(words[i]) ? 1 : 0;
  } else {
    for (long i = 0; i < total; ++i) prim[i] = is_primitive(words[i]) ? 1 : 0;
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (prim[i]) out.push_back(words[i]);
  return out;
}

TruncatedPB build_truncated_pb(int n, int length_bound, int max_size, Exec exec, const PBOptions& opt,
                               PartialBasisMemo* memo) {
  check_args(n, length_bound, opt);
  if (max_size < 1 || max_size > n) max_size = n;
  PartialBasisMemo local;
  PartialBasisMemo& m = memo ? *memo : local;
  auto vertices = enumerate_primitives(n, length_bound, exec);
  std::size_t tested = vertices.size();
  const auto simplices =
      apriori(static_cast<int>(vertices.size()), max_size, exec, opt.candidate_budget, tested, [&](const Simplex& s) {
        std::vector<Word> ws;
        for (int v : s) ws.push_back(vertices[v]);
        return m.test(ws);
      });
  return assemble(n, length_bound, std::move(vertices), simplices, tested);
}

TruncatedPB link_in_pb(const std::vector<Word>& b, int n, int length_bound, Exec exec, const PBOptions& opt,
                       PartialBasisMemo* memo) {
  check_args(n, length_bound, opt);
  for (const Word& w : b)
    if (w.rank() != n) throw InvalidArgument("basis word has the wrong rank");
  if (!is_partial_basis(b)) throw InvalidArgument("B is not a partial basis");
  std::vector<Word> base = WordTuple(n, b).canonical_set().entries();
  PartialBasisMemo local;
  PartialBasisMemo& m = memo ? *memo : local;
  auto with_base = [&](const std::vector<Word>& extra) {
    std::vector<Word> ws = base;
    ws.insert(ws.end(), extra.begin(), extra.end());
    return m.test(ws);
  };
  const int room = n - static_cast<int>(base.size());
  std::vector<Word> vertices;
  std::size_t tested = 0;
  if (room > 0) {
    const auto words = words_up_to(n, length_bound);
    std::vector<char> keep(words.size(), 0);
    const long total = static_cast<long>(words.size());
    auto one = [&](long i) {
      if (std::binary_search(base.begin(), base.end(), words[i])) return false;
      return with_base({words[i]});
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (long i = 0; i < total; ++i) keep[i] = one(i) ? 1 : 0;
    } else {
      for (long i = 0; i < total; ++i) keep[i] = one(i) ? 1 : 0;
    }
    tested = words.size();
    for (std::size_t i = 0; i < words.size(); ++i)
      if (keep[i]) vertices.push_back(words[i]);
  }
  std::vector<Simplex> simplices;
  if (room > 0)
    simplices =
        apriori(static_cast<int>(vertices.size()), room, exec, opt.candidate_budget, tested, [&](const Simplex& s) {
          std::vector<Word> ws;
          for (int v : s) ws.push_back(vertices[v]);
          return with_base(ws);
        });
  return assemble(n, length_bound, std::move(vertices), simplices, tested);
}

FreeFactorHandle free_factor(const std::vector<Word>& b) {
  if (b.empty()) throw InvalidArgument("a free factor handle needs a nonempty partial basis");
  FreeFactorHandle h;
  h.basis = WordTuple(b.front().rank(), b).canonical_set().entries();
  h.rank = static_cast<int>(h.basis.size());
  h.certificate = extend_to_basis(h.basis);
  return h;
}

bool certificate_valid(const FreeFactorHandle& h) {
  if (static_cast<int>(h.basis.size()) != h.rank) return false;
  for (int i = 0; i < h.rank; ++i) {
    const Word img = h.certificate.apply(h.basis[i]);
    if (img != Word::letter(Letter::gen(i + 1), img.rank())) return false;
  }
  return true;
}

bool factor_membership(const Word& w, const FreeFactorHandle& h) {
  if (w.rank() != h.certificate.rank()) throw InvalidArgument("word has the wrong rank");
  return h.certificate.apply(w).max_index() <= h.rank;
}

bool factor_contains(const FreeFactorHandle& big, const FreeFactorHandle& small) {
  return std::all_of(small.basis.begin(), small.basis.end(),
                     [&](const Word& w) { return factor_membership(w, big); });
}

bool factor_equal(const FreeFactorHandle& a, const FreeFactorHandle& b) {
  return a.rank == b.rank && factor_contains(a, b) && factor_contains(b, a);
}

FreeFactorHandle g_map(const std::vector<Word>& sigma, int n) {
  const auto set = WordTuple(n, sigma).canonical_set();
  if (set.empty()) throw InvalidArgument("g is defined on nonempty simplices");
  if (static_cast<int>(set.size()) > n - 1) throw InvalidArgument("g needs a simplex with at most n - 1 vertices");
  return free_factor(set.entries());
}

SphericityExperiment experiment_sphericity(int n, int length_bound, const std::vector<Word>& b, Exec exec,
                                           const PBOptions& opt) {
  SphericityExperiment e;
  e.rank = n;
  e.length_bound = length_bound;
  e.basis = b.empty() ? std::vector<Word>{} : WordTuple(n, b).canonical_set().entries();
  const TruncatedPB t = b.empty() ? build_truncated_pb(n, length_bound, -1, exec, opt)
                                  : link_in_pb(b, n, length_bound, exec, opt);
  const SimplicialComplex& k = t.complex;
  e.vertices = k.vertex_count();
  e.dimension = k.dimension();
  for (int d = 0; d <= e.dimension; ++d) e.f_vector.push_back(k.count(d));

  // Connectivity by union-find on the 1-skeleton.
  std::vector<int> parent(k.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (e.dimension >= 1)
    for (const Simplex& s : k.simplices(1)) parent[find(s[0])] = find(s[1]);
  std::size_t components = 0;
  for (std::size_t v = 0; v < k.vertex_count(); ++v)
    if (find(static_cast<int>(v)) == static_cast<int>(v)) ++components;
  e.connected = components == 1;

  e.homology = reduced_homology(k, exec);
  const int m = n - static_cast<int>(e.basis.size());
  e.predicted_dimension = m - 1;
  e.predicted_connected = m >= 2;
  e.dimension_consistent = e.dimension <= e.predicted_dimension;
  e.connectivity_consistent = !e.predicted_connected || e.connected;
  e.lower_homology_vanishes = e.homology.zero_below(e.predicted_dimension);
  e.top_torsion_free = e.homology.at(e.predicted_dimension).torsion.empty();
  e.label = kTruncatedEvidenceLabel;
  return e;
}

}  // namespace pbc
