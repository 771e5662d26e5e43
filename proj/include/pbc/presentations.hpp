#pragma once

// Relation families for presentations of Aut(F_n), Aut(F_n, {v_1..v_l}) and
// SAut(F_n, {v_1..v_l}), enumerated over all letter/set parameters and checked
// semantically: both sides are realized as automorphisms and compared by
// generator images.
//
// Every relation is stored inverse-free as lhs = rhs, each side a product of
// tokens t1 t2 ... tk (tk acts first). Commutator identities [x, y] = z are
// stored as x y = z y x, with [x, y] = x y x^{-1} y^{-1}.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pbc/autos.hpp"
#include "pbc/exec.hpp"

namespace pbc {

enum class Family {
  R1, R2, R3, R4, R5, R6, R7, R8, R9, R10,
  S0, S1, S2, S3, S4, S5,
  C2_9_1, C2_9_2, C2_9_3,
  T2_10_1, T2_10_2, T2_10_3, T2_10_4, T2_10_5p, T2_10_6,
  T2_11_1, T2_11_2, T2_11_3, T2_11_4, T2_11_5, T2_11_6,
};

enum class Theorem { T2_1, T2_4, T2_5, T2_7, T2_9, T2_10, T2_11 };

std::string_view family_name(Family f);
Family parse_family(std::string_view s);
std::string_view theorem_name(Theorem t);
Theorem parse_theorem(std::string_view s);
std::vector<Family> theorem_families(Theorem t);
// R8-R10 hold in Aut(F_n) but are not relators of the presentation.
bool is_consequence(Family f);

struct RelationInstance {
  Family family = Family::R1;
  std::vector<Token> lhs;
  std::vector<Token> rhs;
  // The instantiated quantifiers, e.g. "A={v1,v2}; a=v1; b=v2".
  std::string params;

  bool operator==(const RelationInstance&) const = default;
};

std::string format_instance(const RelationInstance& r);

struct PresentationOptions {
  // Multiplication tables (R7, S0) are enumerated only up to this rank.
  int max_table_rank = 4;
};

// All instances of the requested families (a subset of theorem_families(t)),
// in canonical order: by family, then lhs tokens, then rhs tokens.
std::vector<RelationInstance> enumerate_relations(Theorem t, const std::vector<Family>& families, int n,
                                                  int l, const PresentationOptions& opt = {});

// True iff both sides compose to the same automorphism of F_n.
bool check_relation(const RelationInstance& r, int n);

// Whether a token names a generator of the presentation in Theorem t.
bool generator_legal(const Token& tok, Theorem t, int n, int l);

struct FamilyCount {
  Family family;
  std::size_t instances = 0;
  std::size_t failures = 0;
};

struct InstanceFailure {
  RelationInstance instance;
  std::string reason;
};

struct VerificationReport {
  Theorem theorem = Theorem::T2_1;
  int n = 0;
  int l = 0;
  std::vector<FamilyCount> counts;
  std::size_t checked = 0;
  std::vector<InstanceFailure> failures;
  // Families skipped by the multiplication-table rank cap.
  std::vector<Family> skipped;
  bool pass() const { return failures.empty(); }
};

VerificationReport verify_presentation(Theorem t, const std::vector<Family>& families, int n, int l,
                                       Exec exec = Exec::parallel, const PresentationOptions& opt = {});

}  // namespace pbc
