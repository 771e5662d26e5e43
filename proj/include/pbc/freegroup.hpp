#pragma once

// Reduced words in the free group F_n and tuples of words.
//
// A letter is a signed generator index: +i is v_i, -i is v_i^{-1}. Words are
// immutable values kept in freely reduced form; every operation returns a
// fresh value.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbc {

class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(int code) : code_(code) {}
  static constexpr Letter gen(int index) { return Letter(index); }
  static constexpr Letter gen_inv(int index) { return Letter(-index); }

  constexpr int code() const { return code_; }
  constexpr int index() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool is_inverse() const { return code_ < 0; }
  constexpr int sign() const { return code_ < 0 ? -1 : 1; }
  constexpr Letter inverse() const { return Letter(-code_); }

  // Position in the fixed total order v_1 < v_1^{-1} < v_2 < v_2^{-1} < ...;
  // also the bit used for subsets of L.
  constexpr int key() const { return 2 * (index() - 1) + (code_ < 0 ? 1 : 0); }
  static constexpr Letter from_key(int key) {
    return Letter((key % 2 == 0) ? key / 2 + 1 : -(key / 2 + 1));
  }

  constexpr bool operator==(const Letter&) const = default;
  constexpr std::strong_ordering operator<=>(const Letter& o) const { return key() <=> o.key(); }

 private:
  int code_ = 0;
};

// All 2n letters of rank n in key order.
std::vector<Letter> letters_of_rank(int rank);

class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}

  // Freely reduces `raw`; throws InvalidArgument on letters outside the rank.
  static Word reduce(std::span<const Letter> raw, int rank);
  static Word reduce(std::initializer_list<int> codes, int rank);
  static Word letter(Letter x, int rank);
  static Word identity(int rank) { return Word(rank); }

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  // Highest generator index occurring in the word (0 for the identity).
  int max_index() const;

  bool operator==(const Word& o) const = default;
  // Shortlex on the letter order; ranks compare first.
  std::strong_ordering operator<=>(const Word& o) const;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;

  friend class WordBuilder;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, int exponent);

// Accumulates letters with on-the-fly free cancellation. Used by the
// automorphism kernels, which substitute many images and reduce once.
class WordBuilder {
 public:
  explicit WordBuilder(int rank) : rank_(rank) {}
  void push(Letter x) {
    if (!buf_.empty() && buf_.back() == x.inverse()) buf_.pop_back();
    else buf_.push_back(x);
  }
  void append(const Word& w) {
    for (Letter x : w.letters()) push(x);
  }
  void append_inverse(const Word& w) {
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) push(it->inverse());
  }
  std::size_t size() const { return buf_.size(); }
  Word build() &&;

 private:
  int rank_;
  std::vector<Letter> buf_;
};

class WordTuple {
 public:
  WordTuple() = default;
  explicit WordTuple(int rank) : rank_(rank) {}
  WordTuple(int rank, std::vector<Word> entries);

  int rank() const { return rank_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Word>& entries() const { return entries_; }
  const Word& operator[](std::size_t i) const { return entries_[i]; }

  std::size_t total_length() const;
  // The entries sorted and deduplicated: the set-level canonical form.
  WordTuple canonical_set() const;

  bool operator==(const WordTuple&) const = default;
  std::strong_ordering operator<=>(const WordTuple& o) const;

 private:
  int rank_ = 0;
  std::vector<Word> entries_;
};

std::size_t total_length(const WordTuple& t);

// Text syntax: whitespace-separated tokens `v<i>` / `v<i>^-1`, aliases `a`..`z`
// for v_1..v_26 (except `e`, reserved for the identity), and `e` for the
// empty word. Tuples separate words with commas.
Word parse_word(std::string_view text, int rank);
WordTuple parse_tuple(std::string_view text, int rank);
std::string format_letter(Letter x);
std::string format_word(const Word& w);
std::string format_tuple(const WordTuple& t);

// Every reduced word of rank n with length exactly `length`, in shortlex order.
std::vector<Word> all_reduced_words(int rank, std::size_t length);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};
struct WordTupleHash {
  std::size_t operator()(const WordTuple& t) const noexcept;
};

}  // namespace pbc
