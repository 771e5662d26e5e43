#pragma once

// Order-preserving maps of posets: fibers, the non-Hausdorff mapping
// cylinder, spherical-map verdicts, the top-homology decomposition and its
// constructive basis.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pbc/chains.hpp"
#include "pbc/complex.hpp"
#include "pbc/exec.hpp"
#include "pbc/homology.hpp"
#include "pbc/poset.hpp"
#include "pbc/sphericity.hpp"

namespace pbc {

struct PosetMap {
  FinitePoset source;
  FinitePoset target;
  std::vector<int> assignment;  // source index -> target index

  PosetMap() = default;
  // Throws InvalidArgument unless the assignment is total, in range and order
  // preserving.
  PosetMap(FinitePoset x, FinitePoset y, std::vector<int> f);

  int operator()(int x) const { return assignment[x]; }
};

// Elements x with f(x) <= y, increasing.
std::vector<int> fiber_elements(const PosetMap& f, int y);
FinitePoset fiber(const PosetMap& f, int y);

struct MappingCylinder {
  FinitePoset poset;   // X first, then Y
  std::vector<int> j;  // X -> M
  std::vector<int> i;  // Y -> M
};

MappingCylinder mapping_cylinder(const PosetMap& f);

struct NamedCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // first counterexample when failing
};

struct FiberVerdict {
  int y = 0;
  int height = 0;
  Verdict upper = Verdict::yes;  // Y_{>y} is (n - h(y) - 1)-spherical
  Verdict fiber = Verdict::yes;  // f/y is h(y)-spherical
};

struct SphericalMapReport {
  int n = 0;
  bool homological = true;
  std::vector<FiberVerdict> per_y;
  Verdict overall = Verdict::yes;
  // Consequences of sphericity, evaluated unconditionally.
  NamedCheck heights{"height_nondecreasing", true, ""};  // h(f(x)) >= h(x)
  NamedCheck surjective{"surjective", true, ""};
  NamedCheck dimensions{"dimensions", true, ""};       // dim X = dim Y = n

  bool pass() const { return overall == Verdict::yes; }
};

// With homological = false the verdicts use is_spherical (budgeted pi_1).
SphericalMapReport check_spherical_map(const PosetMap& f, int n, bool homological = true, Exec exec = Exec::parallel,
                                       const SphericityOptions& opt = {});

struct DecompositionSummand {
  int y = 0;
  int height = 0;
  std::size_t fiber_rank = 0;  // rank H~_{h(y)}(f/y)
  std::size_t upper_rank = 0;  // rank H~_{n-h(y)-1}(Y_{>y})
};

struct Decomposition {
  int n = 0;
  std::size_t target_rank = 0;  // rank H~_n(Y)
  std::vector<DecompositionSummand> summands;
  std::size_t predicted_rank = 0;  // target_rank + sum of products
  std::size_t source_rank = 0;     // rank H~_n(X), computed directly

  bool holds() const { return predicted_rank == source_rank; }
};

// Throws InvalidArgument unless f is homologically n-spherical and Y is
// homologically n-spherical.
Decomposition fiber_decomposition(const PosetMap& f, int n, Exec exec = Exec::parallel);

// Whether f_* : H~_n(X) -> H~_n(Y) is onto.
bool top_homology_epimorphism(const PosetMap& f, int n);

struct BasisOptions {
  // Cap on quadruples examined for the union-compatibility hypothesis.
  std::size_t union_check_budget = 50'000'000;
};

struct SummandBasis {
  int y = 0;
  int height = 0;
  Simplex x;                 // chosen simplex with f(x) = y
  std::vector<Chain> alpha;  // cycles of K_y
  std::vector<Chain> beta;   // cycles of lk(x, K), in the link's own vertices
  std::vector<Chain> products;  // alpha_i * beta_j in K
  std::size_t identity_checks = 0;
  std::size_t identity_failures = 0;
};

struct BasisCertificate {
  int n = 0;
  Verdict link_monotone = Verdict::unknown;      // hypothesis (i)
  Verdict union_compatible = Verdict::unknown;   // hypothesis (ii)
  Verdict upper_epimorphisms = Verdict::unknown; // hypothesis (iii)
  std::string hypothesis_witness;
  bool epimorphism = false;
  std::vector<Chain> gamma;
  std::vector<SummandBasis> summands;
  Matrix change_of_basis;  // columns: candidates in the cycle basis of Z_n(K)
  BigInt determinant = 0;
  std::string failure;

  std::size_t identity_checks() const;
  std::size_t identity_failures() const;
  bool unimodular() const { return determinant == 1 || determinant == -1; }
  bool hypotheses_hold() const {
    return link_monotone == Verdict::yes && union_compatible == Verdict::yes && upper_epimorphisms == Verdict::yes;
  }
  bool pass() const { return failure.empty() && hypotheses_hold() && unimodular() && identity_failures() == 0; }
};

// f must be defined on face_poset(K) (same element order). Verifies the
// hypotheses, builds gamma, alpha and beta, assembles the candidate classes
// and expresses them in a Z-basis of H~_n(K) = Z_n(K). Also checks the chain
// identity phi_*((a * b)') = a' * ftilde_*(b') in the mapping cylinder.
BasisCertificate top_homology_basis(const PosetMap& f, const SimplicialComplex& k, int n, const BasisOptions& opt = {});

}  // namespace pbc
