#include "pbc/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "pbc/errors.hpp"

namespace pbc {

WordTuple whitehead_apply(const WhiteheadAuto& w, const WordTuple& t) {
  std::vector<Word> out;
  out.reserve(t.size());
  for (const Word& u : t.entries()) out.push_back(whitehead_apply(w, u));
  return WordTuple(t.rank(), std::move(out));
}

std::size_t total_length_after(const LambdaAuto& w, const WordTuple& t) {
  std::size_t sum = 0;
  for (const Word& u : t.entries()) sum += whitehead_image_length(w, u);
  return sum;
}

namespace {

const std::vector<LambdaAuto>& lambda_cache(int rank) {
  // Built once for ranks 1..6; static init is thread-safe.
  static const std::vector<std::vector<LambdaAuto>> cache = [] {
    std::vector<std::vector<LambdaAuto>> c(7);
    for (int r = 1; r <= 6; ++r) c[r] = enumerate_lambda(r);
    return c;
  }();
  if (rank < 1 || rank > 6) throw InvalidArgument("orbit search supports ranks 1..6");
  return cache[rank];
}

// One greedy step; returns the index of the best shortening move, or -1.
int best_move(const WordTuple& t) {
  const auto& lambda = lambda_cache(t.rank());
  std::size_t best = t.total_length();
  int arg = -1;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const std::size_t len = total_length_after(lambda[k], t);
    if (len < best) {
      best = len;
      arg = static_cast<int>(k);
    }
  }
  return arg;
}

WordTuple descend(WordTuple t) {
  for (int k = best_move(t); k >= 0; k = best_move(t)) {
    t = whitehead_apply(WhiteheadAuto(lambda_cache(t.rank())[k]), t);
  }
  return t;
}

bool letters_in_distinct_orbits(const WordTuple& t) {
  std::vector<int> seen;
  for (const Word& w : t.entries()) {
    if (w.length() != 1) return false;
    seen.push_back(w[0].index());
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

WordTuple canonical_words(const std::vector<Word>& s) {
  if (s.empty()) throw InvalidArgument("need a nonempty set of words");
  const int rank = s.front().rank();
  for (const Word& w : s)
    if (w.rank() != rank) throw InvalidArgument("words of mismatched rank");
  WordTuple t = WordTuple(rank, s).canonical_set();
  if (static_cast<int>(t.size()) > rank) {
    throw InvalidArgument("more than n words cannot be a partial basis of F_n");
  }
  return t;
}

// tau with tau(x_i) = v_i for the letters x_i of t, other generators sent in
// increasing order to v_{k+1}, ..., v_n.
SignedPerm straightening_perm(const WordTuple& t) {
  const int n = t.rank();
  std::vector<int> im(n, 0);
  std::vector<bool> used(n + 1, false);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Letter x = t[i][0];
    im[x.index() - 1] = x.is_inverse() ? -static_cast<int>(i + 1) : static_cast<int>(i + 1);
    used[x.index()] = true;
  }
  int next = static_cast<int>(t.size()) + 1;
  for (int j = 1; j <= n; ++j)
    if (!used[j]) im[j - 1] = next++;
  return SignedPerm(std::move(im));
}

}  // namespace

MinimizeResult minimize(const WordTuple& u) {
  MinimizeResult r{u, Automorphism::identity(u.rank()), 0};
  for (int k = best_move(r.tuple); k >= 0; k = best_move(r.tuple)) {
    const LambdaAuto& w = lambda_cache(u.rank())[k];
    r.tuple = whitehead_apply(WhiteheadAuto(w), r.tuple);
    r.phi = compose(Automorphism::from_token(Token::W(w), u.rank()), r.phi);
    ++r.steps;
  }
  return r;
}

bool is_minimal(const WordTuple& u) { return best_move(u) < 0; }

bool is_partial_basis(const std::vector<Word>& s) {
  WordTuple t = canonical_words(s);
  for (const Word& w : t.entries())
    if (w.empty()) return false;
  WordTuple m = descend(t);
  return m.total_length() == t.size() && letters_in_distinct_orbits(m);
}

bool is_primitive(const Word& w) { return is_partial_basis({w}); }

Automorphism extend_to_basis(const std::vector<Word>& s) {
  WordTuple t = canonical_words(s);
  for (const Word& w : t.entries())
    if (w.empty()) throw InvalidArgument("the identity is not in any basis");
  MinimizeResult m = minimize(t);
  if (m.tuple.total_length() != t.size() || !letters_in_distinct_orbits(m.tuple)) {
    throw InvalidArgument("not a partial basis");
  }
  const SignedPerm tau = straightening_perm(m.tuple);
  return compose(Automorphism::from_token(Token::P(tau), t.rank()), m.phi);
}

std::optional<Automorphism> factorize(const Automorphism& f) {
  const int n = f.rank();
  WordTuple images(n, f.images());
  for (const Word& w : images.entries())
    if (w.empty()) return std::nullopt;
  MinimizeResult m = minimize(images);
  if (m.tuple.total_length() != static_cast<std::size_t>(n) || !letters_in_distinct_orbits(m.tuple)) {
    return std::nullopt;
  }
  // tau psi f = 1, so f = psi^{-1} tau^{-1}.
  const SignedPerm tau = straightening_perm(m.tuple);
  std::vector<Token> tokens;
  const auto& psi = m.phi.factorization();
  for (auto it = psi.rbegin(); it != psi.rend(); ++it) tokens.push_back(inverse(*it));
  tokens.push_back(Token::P(tau.inverse()));
  if (!(Automorphism::from_tokens(tokens, n) == f)) {
    throw std::logic_error("factorization does not reproduce the automorphism");
  }
  return f.with_factorization(std::move(tokens));
}

// ---------------------------------------------------------------- level graph

namespace {

std::vector<long long> label_key(const WhiteheadAuto& w) {
  if (auto* l = std::get_if<LambdaAuto>(&w)) {
    return {0, static_cast<long long>(l->set), l->multiplier.code()};
  }
  std::vector<long long> k{1};
  for (int c : std::get<SignedPerm>(w).images()) k.push_back(c);
  return k;
}

WhiteheadAuto label_inverse(const WhiteheadAuto& w) {
  if (auto* l = std::get_if<LambdaAuto>(&w)) return lambda_inverse(*l);
  return std::get<SignedPerm>(w).inverse();
}

bool is_omega(const WhiteheadAuto& w) { return std::holds_alternative<SignedPerm>(w); }

Token label_token(const WhiteheadAuto& w) {
  if (auto* l = std::get_if<LambdaAuto>(&w)) return Token::W(*l);
  return Token::P(std::get<SignedPerm>(w));
}

}  // namespace

int LevelGraph::find(const WordTuple& t) const {
  auto it = std::find(vertices.begin(), vertices.end(), t);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

std::pair<int, int> LevelGraph::cell_of(int v, int label) const {
  const std::size_t K = labels.size();
  const int c = cell_index[v * K + label];
  if (c < 0) return {-1, 0};
  const LevelEdge& e = edges[c];
  return {c, (e.from == v && e.label == label) ? 1 : -1};
}

LevelGraph level_graph(const WordTuple& u, const LevelGraphOptions& opt) {
  if (u.empty()) throw InvalidArgument("need a nonempty tuple");
  if (!is_minimal(u)) throw InvalidArgument("tuple is not of minimal total length; minimize it first");
  const int n = u.rank();
  LevelGraph g;
  g.rank = n;
  for (const auto& l : lambda_cache(n)) g.labels.emplace_back(l);
  for (auto& p : enumerate_omega(n)) g.labels.emplace_back(std::move(p));
  const std::size_t K = g.labels.size();
  std::map<std::vector<long long>, int> key_to_label;
  for (std::size_t k = 0; k < K; ++k) key_to_label[label_key(g.labels[k])] = static_cast<int>(k);
  g.inverse_label.resize(K);
  for (std::size_t k = 0; k < K; ++k) g.inverse_label[k] = key_to_label.at(label_key(label_inverse(g.labels[k])));

  const std::size_t len = u.total_length();
  std::unordered_map<WordTuple, int, WordTupleHash> index;
  g.vertices.push_back(u);
  index.emplace(u, 0);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    g.target.resize((v + 1) * K, -1);
    for (std::size_t k = 0; k < K; ++k) {
      if (auto* l = std::get_if<LambdaAuto>(&g.labels[k])) {
        if (total_length_after(*l, g.vertices[v]) != len) continue;
      }
      WordTuple t = whitehead_apply(g.labels[k], g.vertices[v]);
      auto [it, inserted] = index.emplace(t, static_cast<int>(g.vertices.size()));
      if (inserted) {
        if (g.vertices.size() >= opt.vertex_budget) {
          throw BudgetExceeded("level graph exceeds the vertex budget of " + std::to_string(opt.vertex_budget));
        }
        g.vertices.push_back(std::move(t));
      }
      g.target[v * K + k] = it->second;
    }
  }

  g.cell_index.assign(g.vertices.size() * K, -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (std::size_t k = 0; k < K; ++k) {
      const int w = g.target[v * K + k];
      if (w < 0) continue;
      const std::size_t ik = g.inverse_label[k];
      const auto here = std::pair(v, k);
      const auto there = std::pair(static_cast<std::size_t>(w), ik);
      if (here <= there) {
        g.cell_index[v * K + k] = static_cast<int>(g.edges.size());
        g.edges.push_back({static_cast<int>(v), w, static_cast<int>(k)});
      } else {
        g.cell_index[v * K + k] = g.cell_index[w * K + ik];
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------- stabilizer

namespace {

// Spanning tree by 0-1 BFS from the basepoint: Omega-labelled edges cost 0,
// so tree edges are Omega-labelled wherever possible.
void build_tree(StabilizerPresentation& p) {
  const LevelGraph& g = p.graph;
  const std::size_t V = g.vertices.size(), K = g.label_count();
  std::vector<int> dist(V, std::numeric_limits<int>::max());
  std::vector<int> parent_label(V, -1), parent(V, -1);
  std::deque<int> dq;
  dist[0] = 0;
  dq.push_back(0);
  std::vector<bool> done(V, false);
  while (!dq.empty()) {
    const int v = dq.front();
    dq.pop_front();
    if (done[v]) continue;
    done[v] = true;
    for (std::size_t k = 0; k < K; ++k) {
      const int w = g.target[v * K + k];
      if (w < 0 || done[w]) continue;
      const int cost = is_omega(g.labels[k]) ? 0 : 1;
      if (dist[v] + cost < dist[w]) {
        dist[w] = dist[v] + cost;
        parent[w] = v;
        parent_label[w] = static_cast<int>(k);
        if (cost == 0) dq.push_front(w);
        else dq.push_back(w);
      }
    }
  }
  const int n = g.rank;
  p.tree_path.assign(V, Automorphism());
  std::vector<bool> have(V, false);
  p.tree_path[0] = Automorphism::identity(n);
  have[0] = true;
  auto path_to = [&](auto&& self, int v) -> const Automorphism& {
    if (!have[v]) {
      const Automorphism& up = self(self, parent[v]);
      p.tree_path[v] = compose(Automorphism::from_token(label_token(g.labels[parent_label[v]]), n), up);
      have[v] = true;
    }
    return p.tree_path[v];
  };
  for (std::size_t v = 1; v < V; ++v) {
    if (parent[v] < 0) throw std::logic_error("level graph is not connected");
    path_to(path_to, static_cast<int>(v));
    p.tree.push_back(g.cell_of(parent[v], parent_label[v]).first);
  }
  std::sort(p.tree.begin(), p.tree.end());
}

}  // namespace

StabilizerPresentation stabilizer_presentation(const WordTuple& u, Exec exec, const LevelGraphOptions& opt) {
  StabilizerPresentation p;
  p.graph = level_graph(u, opt);
  const LevelGraph& g = p.graph;
  const int n = g.rank;
  const std::size_t K = g.label_count();
  build_tree(p);

  p.realized.resize(g.edges.size());
  for (std::size_t c = 0; c < g.edges.size(); ++c) {
    const LevelEdge& e = g.edges[c];
    Automorphism step = compose(Automorphism::from_token(label_token(g.labels[e.label]), n), p.tree_path[e.from]);
    p.realized[c] = compose(invert_auto(p.tree_path[e.to]), step);
  }
  for (int c : p.tree) p.relators.push_back({{c, 1}});
  p.tree_relators = p.tree.size();

  // 2-cells: every relation of types R1-R10 whose edge path stays in the level.
  const auto relations = enumerate_relations(Theorem::T2_1, theorem_families(Theorem::T2_1), n, 0);
  std::map<std::vector<long long>, int> key_to_label;
  for (std::size_t k = 0; k < K; ++k) key_to_label[label_key(g.labels[k])] = static_cast<int>(k);
  auto labels_of = [&](const std::vector<Token>& side) {
    std::vector<int> out;
    for (const Token& t : side) out.push_back(key_to_label.at(label_key(to_whitehead(t, n))));
    return out;
  };
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rel_labels;
  rel_labels.reserve(relations.size());
  for (const auto& r : relations) rel_labels.emplace_back(labels_of(r.lhs), labels_of(r.rhs));

  const long long V = static_cast<long long>(g.vertices.size());
  struct Cell {
    std::size_t relation;
    std::vector<GeneratorPower> word;
  };
  std::vector<std::vector<Cell>> per_vertex(V);
  auto scan = [&](long long v) {
    for (std::size_t r = 0; r < relations.size(); ++r) {
      // Walk one side from v; tokens act right to left.
      auto walk = [&](const std::vector<int>& side, std::vector<std::pair<int, int>>& path) {
        int cur = static_cast<int>(v);
        for (auto it = side.rbegin(); it != side.rend(); ++it) {
          path.emplace_back(cur, *it);
          cur = g.target[cur * K + *it];
          if (cur < 0) return -1;
        }
        return cur;
      };
      std::vector<std::pair<int, int>> fwd, back;
      const int e1 = walk(rel_labels[r].first, fwd);
      if (e1 < 0) continue;
      const int e2 = walk(rel_labels[r].second, back);
      if (e2 < 0) continue;
      if (e1 != e2) throw std::logic_error("relation path does not close: " + format_instance(relations[r]));
      Cell cell{r, {}};
      for (auto [x, k] : fwd) {
        auto [c, s] = g.cell_of(x, k);
        cell.word.emplace_back(c, s);
      }
      for (auto it = back.rbegin(); it != back.rend(); ++it) {
        auto [c, s] = g.cell_of(it->first, it->second);
        cell.word.emplace_back(c, -s);
      }
      per_vertex[v].push_back(std::move(cell));
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long v = 0; v < V; ++v) scan(v);
  } else {
    for (long long v = 0; v < V; ++v) scan(v);
  }
  for (long long v = 0; v < V; ++v) {
    for (auto& cell : per_vertex[v]) {
      p.relators.push_back(std::move(cell.word));
      p.cell_relations.push_back(relations[cell.relation]);
      p.cell_basepoints.push_back(static_cast<int>(v));
    }
  }
  return p;
}

StabilizerCheck check_stabilizer(const StabilizerPresentation& p, Exec exec) {
  StabilizerCheck chk;
  const int n = p.graph.rank;
  const WordTuple& u = p.graph.vertices.front();
  const std::size_t G = p.realized.size();
  std::vector<Automorphism> inv(G);
  chk.generators = G;
  for (std::size_t c = 0; c < G; ++c) {
    inv[c] = invert_auto(p.realized[c]);
    if (p.realized[c].apply(u) != u) ++chk.generator_failures;
  }
  const Automorphism id = Automorphism::identity(n);
  const long long R = static_cast<long long>(p.relators.size());
  std::vector<char> bad(R, 0);
  auto eval = [&](long long r) {
    // Images only: factorizations are not needed to compare with the identity.
    std::vector<Word> images = id.images();
    for (auto [c, s] : p.relators[r]) {
      const Automorphism& h = s > 0 ? p.realized[c] : inv[c];
      for (Word& w : images) w = h.apply(w);
    }
    bad[r] = images != id.images();
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long r = 0; r < R; ++r) eval(r);
  } else {
    for (long long r = 0; r < R; ++r) eval(r);
  }
  chk.relators = p.relators.size();
  for (char b : bad) chk.relator_failures += b;
  return chk;
}

}  // namespace pbc
