#pragma once

// Small matroids and the poset maps built from them: the (r-2)-skeleton of
// the independence complex mapped to the proper part of the lattice of flats
// by closure. These maps satisfy the spherical-map hypotheses by matroid
// theory, which makes them a generator of admissible test instances.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pbc/complex.hpp"
#include "pbc/exec.hpp"
#include "pbc/quillen.hpp"

namespace pbc {

class Matroid {
 public:
  // rank_of[s] for every subset bitmask s of the ground set.
  Matroid(int ground, std::vector<int> rank_of, std::string description);

  // Direct sum of uniform matroids U_{k,m}, given as (k, m) pairs.
  static Matroid uniform_sum(const std::vector<std::pair<int, int>>& parts);
  // Column matroid of a matrix over F_p (columns listed).
  static Matroid linear(const std::vector<std::vector<int>>& columns, int p);

  int ground() const { return ground_; }
  int rank() const { return rank_of_.back(); }
  int rank(std::uint32_t s) const { return rank_of_[s]; }
  bool independent(std::uint32_t s) const;
  std::uint32_t closure(std::uint32_t s) const;
  bool loopless() const;
  // All flats, ordered by (rank, bitmask).
  std::vector<std::uint32_t> flats() const;
  const std::string& description() const { return description_; }

 private:
  int ground_;
  std::vector<int> rank_of_;
  std::string description_;
};

struct QuillenInstance {
  std::string description;
  int n = 0;
  SimplicialComplex complex;
  PosetMap map;
};

// Requires a loopless matroid of rank >= 2.
QuillenInstance matroid_instance(const Matroid& m);

// Deterministic given the seed: rank 2..4, ground set of at most 7 elements,
// alternating uniform sums and random linear matroids over F_2 and F_3.
std::vector<QuillenInstance> generate_instances(std::uint64_t seed, std::size_t count);

struct InstanceResult {
  std::string description;
  int n = 0;
  std::size_t faces = 0;
  std::size_t flats = 0;
  Verdict spherical = Verdict::unknown;
  bool heights = false;
  bool surjective = false;
  bool dimensions = false;
  std::size_t source_rank = 0;
  std::size_t predicted_rank = 0;
  bool decomposition = false;
  bool epimorphism = false;          // via the order complexes
  bool epimorphism_certificate = false;  // via the basis construction
  bool basis = false;
  BigInt determinant = 0;
  std::size_t identity_checks = 0;
  std::size_t identity_failures = 0;
  Verdict link_monotone = Verdict::unknown;
  Verdict union_compatible = Verdict::unknown;
  Verdict upper_epimorphisms = Verdict::unknown;
  std::string failure;

  bool pass() const;
};

InstanceResult evaluate_instance(const QuillenInstance& inst);

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<InstanceResult> instances;
  std::size_t passed() const;
};

// Instances are evaluated concurrently under Exec::parallel; results are in
// generation order either way.
SuiteReport run_quillen_suite(std::uint64_t seed, std::size_t count, Exec exec = Exec::parallel);

}  // namespace pbc
