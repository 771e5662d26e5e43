#pragma once

// Length-truncated partial-basis complexes of F_n, their links, and free
// factors handled through basis-extension certificates.

#include <cstddef>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "pbc/autos.hpp"
#include "pbc/complex.hpp"
#include "pbc/exec.hpp"
#include "pbc/freegroup.hpp"
#include "pbc/homology.hpp"

namespace pbc {

struct PBOptions {
  // Refuse (n, L) outside n <= 3 with L <= 4, n = 4 with L <= 2.
  bool enforce_default_budget = true;
  // Cap on candidate subsets tested across one build.
  std::size_t candidate_budget = 20'000'000;
};

bool within_default_budget(int n, int length_bound);

// Memoized partial-basis tests keyed by the sorted word set; safe to share
// between threads (insert-if-absent under a mutex).
class PartialBasisMemo {
 public:
  bool test(const std::vector<Word>& words);
  std::size_t lookups() const;
  std::size_t computed() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<WordTuple, bool, WordTupleHash> memo_;
  std::size_t lookups_ = 0;
};

// Primitive elements of length <= L, in shortlex order.
std::vector<Word> enumerate_primitives(int n, int length_bound, Exec exec = Exec::parallel);

struct TruncatedPB {
  int rank = 0;
  int length_bound = 0;
  std::vector<Word> vertices;  // vertex i of the complex
  SimplicialComplex complex;   // labels are the formatted words
  std::size_t candidates_tested = 0;
};

// Simplices are partial bases of at most max_size vertices (n when max_size
// is outside 1..n); a candidate is tested only when all its facets passed.
TruncatedPB build_truncated_pb(int n, int length_bound, int max_size = -1, Exec exec = Exec::parallel,
                               const PBOptions& opt = {}, PartialBasisMemo* memo = nullptr);

// lk(B, PB(F_n)) restricted to vertices of length <= L. Throws
// InvalidArgument when B is not a partial basis.
TruncatedPB link_in_pb(const std::vector<Word>& b, int n, int length_bound, Exec exec = Exec::parallel,
                       const PBOptions& opt = {}, PartialBasisMemo* memo = nullptr);

struct FreeFactorHandle {
  std::vector<Word> basis;   // sorted, deduplicated
  int rank = 0;              // |basis|
  Automorphism certificate;  // sends basis[i] to v_{i+1}
};

// Throws InvalidArgument when B is not a partial basis.
FreeFactorHandle free_factor(const std::vector<Word>& b);
bool certificate_valid(const FreeFactorHandle& h);
// w lies in <B> iff the certificate sends w into <v_1, ..., v_|B|>.
bool factor_membership(const Word& w, const FreeFactorHandle& h);
bool factor_contains(const FreeFactorHandle& big, const FreeFactorHandle& small);
bool factor_equal(const FreeFactorHandle& a, const FreeFactorHandle& b);

// sigma -> <sigma> on simplices with at most n - 1 vertices.
FreeFactorHandle g_map(const std::vector<Word>& sigma, int n);

extern const char* const kTruncatedEvidenceLabel;

struct SphericityExperiment {
  int rank = 0;
  int length_bound = 0;
  std::vector<Word> basis;
  std::size_t vertices = 0;
  std::vector<std::size_t> f_vector;  // simplices per dimension
  int dimension = -1;
  bool connected = false;
  HomologyResult homology;
  // Predictions for the untruncated link: dimension n - |B| - 1, reduced
  // homology vanishing below it, connected when n - |B| >= 2.
  int predicted_dimension = 0;
  bool predicted_connected = false;
  bool dimension_consistent = false;
  bool connectivity_consistent = false;
  bool lower_homology_vanishes = false;
  bool top_torsion_free = false;
  std::string label;
};

SphericityExperiment experiment_sphericity(int n, int length_bound, const std::vector<Word>& b,
                                           Exec exec = Exec::parallel, const PBOptions& opt = {});

}  // namespace pbc
