#include "pbc/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "pbc/errors.hpp"

namespace pbc {

std::vector<Letter> letters_of_rank(int rank) {
  std::vector<Letter> out;
  out.reserve(2 * rank);
  for (int k = 0; k < 2 * rank; ++k) out.push_back(Letter::from_key(k));
  return out;
}

namespace {

void check_letter(Letter x, int rank) {
  if (x.code() == 0 || x.index() > rank) {
    throw InvalidArgument("letter " + std::to_string(x.code()) + " outside rank " +
                          std::to_string(rank));
  }
}

}  // namespace

Word WordBuilder::build() && {
  Word w(rank_);
  w.letters_ = std::move(buf_);
  return w;
}

Word Word::reduce(std::span<const Letter> raw, int rank) {
  if (rank < 1) throw InvalidArgument("rank must be at least 1");
  WordBuilder b(rank);
  for (Letter x : raw) {
    check_letter(x, rank);
    b.push(x);
  }
  return std::move(b).build();
}

Word Word::reduce(std::initializer_list<int> codes, int rank) {
  std::vector<Letter> raw;
  raw.reserve(codes.size());
  for (int c : codes) raw.emplace_back(c);
  return reduce(raw, rank);
}

Word Word::letter(Letter x, int rank) {
  const Letter one[] = {x};
  return reduce(one, rank);
}

Word Word::inverse() const {
  WordBuilder b(rank_);
  b.append_inverse(*this);
  return std::move(b).build();
}

int Word::max_index() const {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, x.index());
  return m;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = rank_ <=> o.rank_; c != 0) return c;
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(),
                                                o.letters_.begin(), o.letters_.end());
}

Word multiply(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw InvalidArgument("rank mismatch in multiply");
  WordBuilder b(u.rank());
  b.append(u);
  b.append(v);
  return std::move(b).build();
}

Word invert(const Word& u) { return u.inverse(); }

Word power(const Word& u, int exponent) {
  WordBuilder b(u.rank());
  for (int i = 0; i < std::abs(exponent); ++i) {
    if (exponent > 0) b.append(u);
    else b.append_inverse(u);
  }
  return std::move(b).build();
}

WordTuple::WordTuple(int rank, std::vector<Word> entries) : rank_(rank), entries_(std::move(entries)) {
  for (const Word& w : entries_) {
    if (w.rank() != rank_) throw InvalidArgument("tuple entries must share the tuple rank");
  }
}

std::size_t WordTuple::total_length() const {
  std::size_t sum = 0;
  for (const Word& w : entries_) sum += w.length();
  return sum;
}

WordTuple WordTuple::canonical_set() const {
  std::vector<Word> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return WordTuple(rank_, std::move(sorted));
}

std::strong_ordering WordTuple::operator<=>(const WordTuple& o) const {
  if (auto c = rank_ <=> o.rank_; c != 0) return c;
  return std::lexicographical_compare_three_way(entries_.begin(), entries_.end(), o.entries_.begin(),
                                                o.entries_.end());
}

std::size_t total_length(const WordTuple& t) { return t.total_length(); }

// ---------------------------------------------------------------- text syntax

namespace {

Letter parse_token(std::string_view tok, std::size_t pos, int rank) {
  bool inverse = false;
  if (auto caret = tok.find('^'); caret != std::string_view::npos) {
    if (tok.substr(caret) != "^-1") throw ParseError("bad exponent in token '" + std::string(tok) + "'", pos);
    inverse = true;
    tok = tok.substr(0, caret);
  }
  int index = 0;
  if (tok.size() >= 2 && tok[0] == 'v') {
    auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), index);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw ParseError("bad generator token '" + std::string(tok) + "'", pos);
    }
  } else if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z' && tok[0] != 'e') {
    index = tok[0] - 'a' + 1;
  } else {
    throw ParseError("unknown token '" + std::string(tok) + "'", pos);
  }
  if (index < 1 || index > rank) {
    throw ParseError("generator '" + std::string(tok) + "' outside rank " + std::to_string(rank), pos);
  }
  return inverse ? Letter::gen_inv(index) : Letter::gen(index);
}

Word parse_word_at(std::string_view text, std::size_t offset, int rank) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    if (tok != "e") raw.push_back(parse_token(tok, offset + i, rank));
    i = j;
  }
  return Word::reduce(raw, rank);
}

}  // namespace

Word parse_word(std::string_view text, int rank) {
  if (rank < 1) throw InvalidArgument("rank must be at least 1");
  return parse_word_at(text, 0, rank);
}

WordTuple parse_tuple(std::string_view text, int rank) {
  if (rank < 1) throw InvalidArgument("rank must be at least 1");
  std::vector<Word> words;
  std::size_t start = 0;
  bool blank = text.find_first_not_of(" \t\n") == std::string_view::npos;
  if (blank) return WordTuple(rank);
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (part.find_first_not_of(" \t\n") == std::string_view::npos) {
      throw ParseError("empty tuple entry (write 'e' for the identity)", start);
    }
    words.push_back(parse_word_at(part, start, rank));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return WordTuple(rank, std::move(words));
}

std::string format_letter(Letter x) {
  std::string s = "v" + std::to_string(x.index());
  if (x.is_inverse()) s += "^-1";
  return s;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) s += ' ';
    s += format_letter(w[i]);
  }
  return s;
}

std::string format_tuple(const WordTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += format_word(t[i]);
  }
  return s;
}

std::vector<Word> all_reduced_words(int rank, std::size_t length) {
  std::vector<Word> out;
  const std::vector<Letter> alphabet = letters_of_rank(rank);
  std::vector<Letter> cur;
  // Depth-first in key order yields shortlex order within one length.
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == length) {
      out.push_back(Word::reduce(cur, rank));
      return;
    }
    for (Letter x : alphabet) {
      if (!cur.empty() && cur.back() == x.inverse()) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = std::hash<int>{}(w.rank());
  for (Letter x : w.letters()) h = h * 1000003u ^ static_cast<std::size_t>(x.key() + 1);
  return h;
}

std::size_t WordTupleHash::operator()(const WordTuple& t) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Word& w : t.entries()) h = (h ^ WordHash{}(w)) * 0x100000001b3ull + 17;
  return h;
}

}  // namespace pbc
