#include "pbc/sphericity.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace pbc {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

Verdict is_homologically_spherical(const SimplicialComplex& k, int n, Exec exec) {
  if (k.dimension() != n) return Verdict::no;
  return reduced_homology(k, exec).zero_below(n) ? Verdict::yes : Verdict::no;
}

Verdict is_homologically_spherical(const FinitePoset& p, int n, Exec exec) {
  return is_homologically_spherical(order_complex(p), n, exec);
}

GroupPresentation edge_path_group(const SimplicialComplex& k) {
  GroupPresentation g;
  const int nv = static_cast<int>(k.vertex_count());
  if (nv == 0) return g;
  const auto& edges = k.simplices(1);
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e][0]].emplace_back(edges[e][1], e);
    adj[edges[e][1]].emplace_back(edges[e][0], e);
  }
  std::vector<char> tree(edges.size(), 0), seen(nv, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (auto [w, e] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        tree[e] = 1;
        q.push(w);
      }
  }
  std::vector<int> gen(edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!tree[e]) gen[e] = ++g.generators;
  auto letter = [&](int a, int b) {
    // Edge a -> b, stored low -> high.
    const int e = k.index_of(a < b ? Simplex{a, b} : Simplex{b, a});
    const int x = gen[e];
    return a < b ? x : -x;
  };
  for (const auto& t : k.simplices(2)) {
    std::vector<int> r;
    for (int x : {letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])})
      if (x != 0) r.push_back(x);
    g.relators.push_back(std::move(r));
  }
  return g;
}

namespace {

void free_reduce(std::vector<int>& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  std::size_t i = 0, j = out.size();
  while (j - i >= 2 && out[i] == -out[j - 1]) ++i, --j;
  w.assign(out.begin() + static_cast<long>(i), out.begin() + static_cast<long>(j));
}

}  // namespace

Verdict simplify_to_trivial(GroupPresentation g, std::size_t budget) {
  std::vector<char> live(g.generators + 1, 1);
  int live_count = g.generators;
  std::size_t work = 0;
  while (true) {
    std::vector<std::vector<int>> rels;
    for (auto& r : g.relators) {
      free_reduce(r);
      if (!r.empty()) rels.push_back(std::move(r));
    }
    g.relators = std::move(rels);
    if (live_count == 0) return Verdict::yes;
    if (g.relators.empty()) return Verdict::no;
    // Pick the shortest relator containing a generator exactly once.
    int best_rel = -1, best_gen = 0;
    std::size_t best_len = 0;
    for (int i = 0; i < static_cast<int>(g.relators.size()); ++i) {
      const auto& r = g.relators[i];
      if (best_rel >= 0 && r.size() >= best_len) continue;
      std::map<int, int> occ;
      for (int x : r) ++occ[x < 0 ? -x : x];
      for (auto [x, c] : occ)
        if (c == 1) {
          best_rel = i;
          best_gen = x;
          best_len = r.size();
          break;
        }
    }
    if (best_rel < 0) return Verdict::unknown;
    std::vector<int> r = g.relators[best_rel];
    g.relators.erase(g.relators.begin() + best_rel);
    // Rotate so the generator is first: x^e w = 1.
    const auto pos = std::find_if(r.begin(), r.end(), [&](int x) { return x == best_gen || x == -best_gen; });
    std::rotate(r.begin(), pos, r.end());
    const int e = r.front();
    std::vector<int> w(r.begin() + 1, r.end());
    // x = w^{-1} when e = +x, x = w when e = -x.
    std::vector<int> image;
    if (e > 0) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) image.push_back(-*it);
    } else {
      image = w;
    }
    for (auto& rel : g.relators) {
      std::vector<int> out;
      for (int x : rel) {
        if (x == best_gen) {
          out.insert(out.end(), image.begin(), image.end());
        } else if (x == -best_gen) {
          for (auto it = image.rbegin(); it != image.rend(); ++it) out.push_back(-*it);
        } else {
          out.push_back(x);
        }
      }
      work += out.size();
      rel = std::move(out);
    }
    live[best_gen] = 0;
    --live_count;
    if (work > budget) return Verdict::unknown;
  }
}

Verdict is_spherical(const SimplicialComplex& k, int n, const SphericityOptions& opt, Exec exec) {
  if (is_homologically_spherical(k, n, exec) == Verdict::no) return Verdict::no;
  if (n < 2) return Verdict::yes;
  return simplify_to_trivial(edge_path_group(k), opt.pi1_budget);
}

Verdict is_spherical(const FinitePoset& p, int n, const SphericityOptions& opt, Exec exec) {
  return is_spherical(order_complex(p), n, opt, exec);
}

}  // namespace pbc
