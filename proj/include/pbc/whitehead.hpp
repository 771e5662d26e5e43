#pragma once

// Orbit minimization of word tuples under Whitehead automorphisms (McCool's
// method): greedy descent, the graph of minimal-length tuples, and the
// presentation of the stabilizer read off from it. Partial-basis decision,
// basis extension and automorphism factorization are built on the descent.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pbc/autos.hpp"
#include "pbc/exec.hpp"
#include "pbc/freegroup.hpp"
#include "pbc/presentations.hpp"

namespace pbc {

WordTuple whitehead_apply(const WhiteheadAuto& w, const WordTuple& t);
std::size_t total_length_after(const LambdaAuto& w, const WordTuple& t);

struct MinimizeResult {
  WordTuple tuple;   // minimal total length in the orbit
  Automorphism phi;  // phi(U) = tuple, factored into W tokens
  std::size_t steps = 0;
};

// Greedy descent: apply the (A;a) giving the shortest image while that is
// strictly shorter; ties go to the first in enumerate_lambda order.
MinimizeResult minimize(const WordTuple& u);

// True iff no single Whitehead automorphism shortens the tuple.
bool is_minimal(const WordTuple& u);

// Set-level queries: words are deduplicated and sorted before use.
bool is_partial_basis(const std::vector<Word>& s);
bool is_primitive(const Word& w);

// phi with phi(S) = {v_1, ..., v_k}: phi sends the i-th word of the sorted,
// deduplicated S to v_i. Throws InvalidArgument if S is not a partial basis.
Automorphism extend_to_basis(const std::vector<Word>& s);

// A factorization of an endomorphism given by images, or nullopt when the
// images do not form a basis (the map is not an automorphism).
std::optional<Automorphism> factorize(const Automorphism& f);

// ---------------------------------------------------------------- level graph

struct LevelGraphOptions {
  std::size_t vertex_budget = 1'000'000;
};

// One 1-cell: the directed edge (from, to, label) identified with
// (to, from, label^{-1}). Stored in its canonical direction.
struct LevelEdge {
  int from = 0;
  int to = 0;
  int label = 0;  // index into LevelGraph::labels
};

struct LevelGraph {
  int rank = 0;
  std::vector<WordTuple> vertices;  // vertices[0] is the basepoint
  std::vector<WhiteheadAuto> labels;  // Lambda(F_n) then Omega(F_n)
  std::vector<int> inverse_label;
  std::vector<LevelEdge> edges;
  // Directed adjacency: target[v * labels.size() + k] is the vertex reached
  // from v by label k, or -1 when the label leaves the minimal level.
  std::vector<int> target;

  int find(const WordTuple& t) const;
  std::size_t label_count() const { return labels.size(); }
  // 1-cell index and orientation (+1 canonical, -1 reversed) of a directed edge.
  std::pair<int, int> cell_of(int v, int label) const;

  std::vector<int> cell_index;  // per directed edge (v, label), or -1
};

// BFS closure of a minimal tuple under all Whitehead automorphisms that keep
// the total length. Throws InvalidArgument when u is not minimal and
// BudgetExceeded past the vertex budget.
LevelGraph level_graph(const WordTuple& u, const LevelGraphOptions& opt = {});

// ---------------------------------------------------------------- stabilizer

using GeneratorPower = std::pair<int, int>;  // (generator, +1 or -1)

struct StabilizerPresentation {
  LevelGraph graph;
  std::vector<int> tree;                   // 1-cells in the spanning tree
  std::vector<Automorphism> tree_path;     // per vertex: g_V with g_V(U) = V
  std::vector<Automorphism> realized;      // per 1-cell: g_{to}^{-1} phi g_{from}
  std::vector<std::vector<GeneratorPower>> relators;  // tree edges first, then 2-cells
  std::vector<RelationInstance> cell_relations;       // the relation behind each 2-cell
  std::vector<int> cell_basepoints;                   // vertex each 2-cell starts at
  std::size_t tree_relators = 0;
};

StabilizerPresentation stabilizer_presentation(const WordTuple& u, Exec exec = Exec::parallel,
                                               const LevelGraphOptions& opt = {});

struct StabilizerCheck {
  std::size_t relators = 0;
  std::size_t relator_failures = 0;
  std::size_t generators = 0;
  std::size_t generator_failures = 0;  // realized generators not fixing U
  bool pass() const { return relator_failures == 0 && generator_failures == 0; }
};

// Realizes every relator through the realized generators and checks it is the
// identity; checks every realized generator fixes the basepoint tuple.
StabilizerCheck check_stabilizer(const StabilizerPresentation& p, Exec exec = Exec::parallel);

}  // namespace pbc
