#pragma once

// Reduced integral homology of simplicial complexes via invariant factors of
// the augmented boundary matrices.

#include <cstddef>
#include <string>
#include <vector>

#include "pbc/bigint.hpp"
#include "pbc/chains.hpp"
#include "pbc/complex.hpp"
#include "pbc/exec.hpp"
#include "pbc/poset.hpp"
#include "pbc/smith.hpp"

namespace pbc {

// Augmented chain complex: ranks[d + 1] = rank of C_d for d = -1..top, and
// boundary[d + 1] : C_d -> C_{d-1} for d = 0..top (boundary[0] is unused).
struct IntegerChainComplex {
  int top = -1;
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> boundary;

  std::size_t rank(int d) const { return (d < -1 || d > top) ? 0 : ranks[d + 1]; }
  const SparseMatrix& boundary_at(int d) const { return boundary[d + 1]; }
};

// Rows indexed by simplices(d - 1), columns by simplices(d).
SparseMatrix boundary_matrix(const SimplicialComplex& k, int d);
IntegerChainComplex augmented_chain_complex(const SimplicialComplex& k);

// True iff every composite d_{d-1} d_d is zero.
bool boundaries_square_to_zero(const IntegerChainComplex& c);

struct DegreeHomology {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // each > 1, dividing the next

  bool zero() const { return rank == 0 && torsion.empty(); }
  bool operator==(const DegreeHomology&) const = default;
};

struct HomologyResult {
  std::vector<DegreeHomology> degrees;  // degree -1 .. top

  DegreeHomology at(int d) const;  // zero group outside the range
  std::size_t rank(int d) const { return at(d).rank; }
  bool zero_below(int n) const;           // H~_i = 0 for all i < n
  bool acyclic() const;
  long long reduced_euler_characteristic() const;
  bool operator==(const HomologyResult& o) const;
};

std::string format_homology(const HomologyResult& h);

HomologyResult homology(const IntegerChainComplex& c, Exec exec = Exec::parallel);
HomologyResult reduced_homology(const SimplicialComplex& k, Exec exec = Exec::parallel);
HomologyResult reduced_homology(const FinitePoset& p, Exec exec = Exec::parallel);

// Z-basis of the d-cycles of K (augmented), as coordinate vectors over
// simplices(d).
std::vector<Vector> cycle_basis(const SimplicialComplex& k, int d);

// Coordinates of d-cycles of K in the basis cycle_basis(K, d).
class CycleCoordinates {
 public:
  CycleCoordinates(const SimplicialComplex& k, int d);
  const std::vector<Vector>& basis() const { return basis_; }
  // Throws InvalidArgument when c is not a cycle of K.
  Vector operator()(const Chain& c) const;

 private:
  const SimplicialComplex* k_;
  int d_;
  std::vector<Vector> basis_;
  IntegerSolver solver_;
};

// Whether the simplicial map a -> b given on vertices induces an epimorphism
// on H~_d: the images of the cycles of a together with the boundaries of b
// must span the cycles of b.
bool induced_epimorphism(const SimplicialComplex& a, const SimplicialComplex& b, const std::vector<int>& vertex_map,
                         int d);

}  // namespace pbc
