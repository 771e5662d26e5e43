#pragma once

// Automorphisms of F_n given by generator images, and the Whitehead
// generators (A;a) and letter permutations.
//
// Composition is right to left: compose(f, g)(w) = f(g(w)). A factorization
// [t1, t2, ..., tk] denotes the product t1 t2 ... tk, so tk acts first.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pbc/bigint.hpp"
#include "pbc/freegroup.hpp"

namespace pbc {

// Subset of L = {v_1, v_1^{-1}, ..., v_n, v_n^{-1}} as bits indexed by Letter::key().
using LetterMask = std::uint64_t;
constexpr int kMaxRank = 32;

constexpr LetterMask bit(Letter x) { return LetterMask{1} << x.key(); }
constexpr bool contains(LetterMask m, Letter x) { return (m & bit(x)) != 0; }
inline LetterMask full_mask(int rank) {
  return rank >= 32 ? ~LetterMask{0} : (LetterMask{1} << (2 * rank)) - 1;
}
LetterMask mask_of(std::initializer_list<Letter> xs);
std::vector<Letter> mask_letters(LetterMask m);

// A signed permutation: image[i-1] is the signed code of the image of v_i.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images);
  static SignedPerm identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  Letter operator()(Letter x) const {
    int c = images_[x.index() - 1];
    return Letter(x.is_inverse() ? -c : c);
  }
  SignedPerm inverse() const;
  // (this * o)(x) = this(o(x)).
  SignedPerm operator*(const SignedPerm& o) const;
  int sign_of_determinant() const;
  bool operator==(const SignedPerm&) const = default;
  auto operator<=>(const SignedPerm&) const = default;

 private:
  std::vector<int> images_;
};

// All 2^n n! signed permutations of rank n, in lexicographic order of images.
std::vector<SignedPerm> enumerate_omega(int rank);

// An element of Lambda(F_n), (A;a) with a in A and a^{-1} not in A.
struct LambdaAuto {
  LetterMask set = 0;
  Letter multiplier;
  bool operator==(const LambdaAuto&) const = default;
};

using WhiteheadAuto = std::variant<LambdaAuto, SignedPerm>;

// Throws InvalidArgument unless a in A, a^{-1} not in A, and A within rank.
LambdaAuto make_lambda(LetterMask set, Letter a, int rank);
// Every well-formed (A;a) of rank n, ordered by (a, A).
std::vector<LambdaAuto> enumerate_lambda(int rank);
// The inverse of (A;a): (A - {a} + {a^{-1}}; a^{-1}).
LambdaAuto lambda_inverse(const LambdaAuto& w);

// Which row of the defining table applies to letter x: 0 fixed multiplier,
// 1 conjugated, 2 right-multiplied, 3 left-multiplied, 4 untouched.
int lambda_case(const LambdaAuto& w, Letter x);
Word whitehead_apply(const LambdaAuto& w, Letter x, int rank);
Word whitehead_apply(const WhiteheadAuto& w, Letter x, int rank);
// Applies the letter table and reduces once at the end.
Word whitehead_apply(const WhiteheadAuto& w, const Word& u);
// Length of w(u) without materializing it.
std::size_t whitehead_image_length(const LambdaAuto& w, const Word& u);

// Named generator tokens used in factorizations and relation instances.
struct Token {
  enum class Kind { E, M, w, W, P };
  Kind kind = Kind::P;
  Letter a;           // E, M, w: first letter; W: multiplier
  Letter b;           // E, M, w: second letter
  LetterMask set = 0; // W
  SignedPerm perm;    // P

  static Token E(Letter a, Letter b) { return {Kind::E, a, b, 0, {}}; }
  static Token M(Letter a, Letter b) { return {Kind::M, a, b, 0, {}}; }
  static Token w_(Letter a, Letter b) { return {Kind::w, a, b, 0, {}}; }
  static Token W(const LambdaAuto& x) { return {Kind::W, x.multiplier, Letter(), x.set, {}}; }
  static Token P(SignedPerm p) { return {Kind::P, Letter(), Letter(), 0, std::move(p)}; }

  bool operator==(const Token&) const = default;
  bool operator<(const Token& o) const;
};

Token inverse(const Token& t);
// w_{a,b} as the letter permutation a -> b^{-1}, b -> a.
SignedPerm w_as_perm(Letter a, Letter b, int rank);
// The Whitehead automorphism a token denotes, when it is one: W and P map
// directly, w is a permutation, E_{a,b} = ({a,b}; b), M_{a,b} = ({a^{-1},b^{-1}}; b^{-1}).
WhiteheadAuto to_whitehead(const Token& t, int rank);
std::string format_token(const Token& t);
Token parse_token(std::string_view text, int rank);

class Automorphism {
 public:
  Automorphism() = default;

  static Automorphism identity(int rank);
  // An endomorphism from raw images. It carries no factorization and is not
  // certified; see whitehead.hpp for factorize().
  static Automorphism from_images(int rank, std::vector<Word> images);
  static Automorphism from_token(const Token& t, int rank);
  static Automorphism from_tokens(const std::vector<Token>& tokens, int rank);
  static Automorphism from_whitehead(const WhiteheadAuto& w, int rank);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int index) const { return images_[index - 1]; }
  bool has_factorization() const { return factorization_.has_value(); }
  const std::vector<Token>& factorization() const;
  bool certified() const { return factorization_.has_value(); }

  Word apply(const Word& u) const;
  Word apply(Letter x) const;
  WordTuple apply(const WordTuple& t) const;

  // Equality is equality of generator images.
  bool operator==(const Automorphism& o) const { return rank_ == o.rank_ && images_ == o.images_; }

  Automorphism with_factorization(std::vector<Token> f) const;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
  std::optional<std::vector<Token>> factorization_;
};

Automorphism make_E(Letter a, Letter b, int rank);
Automorphism make_M(Letter a, Letter b, int rank);
Automorphism make_w(Letter a, Letter b, int rank);

Automorphism compose(const Automorphism& f, const Automorphism& g);
// Requires a factorization; throws InvalidArgument otherwise.
Automorphism invert_auto(const Automorphism& f);

// Exponent-sum matrix: entry (i, j) is the exponent sum of v_i in f(v_j).
std::vector<std::vector<long long>> abelianization(const Automorphism& f);
BigInt determinant(const std::vector<std::vector<long long>>& m);
bool is_special(const Automorphism& f);
bool fixes_prefix(const Automorphism& f, int l);

}  // namespace pbc
