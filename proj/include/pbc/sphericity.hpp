#pragma once

// Sphericity verdicts for finite complexes and posets.

#include <cstddef>
#include <string>
#include <vector>

#include "pbc/complex.hpp"
#include "pbc/exec.hpp"
#include "pbc/homology.hpp"
#include "pbc/poset.hpp"

namespace pbc {

enum class Verdict { yes, no, unknown };

std::string verdict_name(Verdict v);

struct SphericityOptions {
  // Cap on the total relator length handled while simplifying the edge-path
  // group presentation.
  std::size_t pi1_budget = 200'000;
};

// dim K = n and H~_i(K) = 0 for every i < n. Never unknown.
Verdict is_homologically_spherical(const SimplicialComplex& k, int n, Exec exec = Exec::parallel);
Verdict is_homologically_spherical(const FinitePoset& p, int n, Exec exec = Exec::parallel);

// dim K = n and K is (n-1)-connected. Beyond the homological conditions this
// needs pi_1(K) = 1 when n >= 2, decided by simplifying the edge-path group;
// unknown when the simplification stalls or the budget runs out. (For n >= 3
// simple connectivity plus vanishing homology gives the rest by Hurewicz.)
Verdict is_spherical(const SimplicialComplex& k, int n, const SphericityOptions& opt = {},
                     Exec exec = Exec::parallel);
Verdict is_spherical(const FinitePoset& p, int n, const SphericityOptions& opt = {}, Exec exec = Exec::parallel);

// Edge-path group of a connected complex: generators are the 1-simplices off
// a spanning tree, one relator per 2-simplex. Letters are +-(generator + 1).
struct GroupPresentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;
};

GroupPresentation edge_path_group(const SimplicialComplex& k);

// Tietze moves: free and cyclic reduction, dropping trivial relators, and
// eliminating a generator that occurs exactly once in some relator.
// Returns yes if the group is trivial, no if it is visibly free of positive
// rank (no relators left), unknown otherwise.
Verdict simplify_to_trivial(GroupPresentation g, std::size_t budget);

}  // namespace pbc
