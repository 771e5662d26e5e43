#pragma once

// Seeded random inputs shared by the unit tests and the acceptance suite.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pbc/complex.hpp"
#include "pbc/poset.hpp"
#include "pbc/quillen.hpp"

namespace gen {

// Relations only go from lower to higher index, so the index order is a
// linear extension.
inline pbc::FinitePoset random_poset(std::mt19937_64& rng, int max_elements = 10, double p = 0.3,
                                     int min_elements = 0) {
  const int n = std::uniform_int_distribution<int>(min_elements, max_elements)(rng);
  std::bernoulli_distribution edge(p);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) rel.emplace_back(i, j);
  return pbc::FinitePoset(labels, rel);
}

// An order-preserving map X -> Y, both with at most max_elements elements.
// Elements of X are assigned in index order, each to a uniformly chosen y
// above the images of everything below it; dead ends redraw the pair.
inline pbc::PosetMap random_poset_map(std::mt19937_64& rng, int max_elements = 10) {
  while (true) {
    pbc::FinitePoset x = random_poset(rng, max_elements, 0.3, 1);
    pbc::FinitePoset y = random_poset(rng, max_elements, 0.3, 1);
    std::vector<int> f(x.size(), -1);
    bool ok = true;
    for (int i = 0; i < static_cast<int>(x.size()) && ok; ++i) {
      std::vector<int> choices;
      for (int c = 0; c < static_cast<int>(y.size()); ++c) {
        bool above = true;
        for (int j = 0; j < i && above; ++j)
          if (x.less(j, i)) above = y.leq(f[j], c);
        if (above) choices.push_back(c);
      }
      if (choices.empty()) ok = false;
      else f[i] = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    }
    if (ok) return pbc::PosetMap(std::move(x), std::move(y), std::move(f));
  }
}

inline pbc::SimplicialComplex boundary_of_simplex(int d) {
  std::vector<pbc::Simplex> faces;
  for (int skip = 0; skip <= d; ++skip) {
    pbc::Simplex s;
    for (int v = 0; v <= d; ++v)
      if (v != skip) s.push_back(v);
    faces.push_back(s);
  }
  return pbc::SimplicialComplex::from_facets(d + 1, faces);
}

inline pbc::SimplicialComplex projective_plane() {
  std::vector<pbc::Simplex> t = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                 {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  for (auto& s : t)
    for (auto& v : s) --v;
  return pbc::SimplicialComplex::from_facets(6, t);
}

inline pbc::SimplicialComplex torus7() {
  std::vector<pbc::Simplex> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return pbc::SimplicialComplex::from_facets(7, t);
}

inline pbc::SimplicialComplex two_points() { return pbc::SimplicialComplex::from_facets(2, {}); }

inline pbc::SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices = 8) {
  const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  const int f = std::uniform_int_distribution<int>(1, 7)(rng);
  std::vector<pbc::Simplex> faces;
  for (int i = 0; i < f; ++i) {
    const int size = std::uniform_int_distribution<int>(1, std::min(n, 4))(rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    faces.emplace_back(perm.begin(), perm.begin() + size);
  }
  return pbc::SimplicialComplex::from_facets(n, faces);
}

}  // namespace gen
