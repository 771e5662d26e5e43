#include "pbc/autos.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

#include "pbc/errors.hpp"

namespace pbc {

LetterMask mask_of(std::initializer_list<Letter> xs) {
  LetterMask m = 0;
  for (Letter x : xs) m |= bit(x);
  return m;
}

std::vector<Letter> mask_letters(LetterMask m) {
  std::vector<Letter> out;
  while (m) {
    int k = std::countr_zero(m);
    out.push_back(Letter::from_key(k));
    m &= m - 1;
  }
  return out;
}

// ---------------------------------------------------------------- SignedPerm

SignedPerm::SignedPerm(std::vector<int> images) : images_(std::move(images)) {
  const int n = rank();
  std::vector<bool> seen(n + 1, false);
  for (int c : images_) {
    int i = c < 0 ? -c : c;
    if (i < 1 || i > n || seen[i]) throw InvalidArgument("not a signed permutation");
    seen[i] = true;
  }
}

SignedPerm SignedPerm::identity(int rank) {
  std::vector<int> im(rank);
  std::iota(im.begin(), im.end(), 1);
  return SignedPerm(std::move(im));
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= rank(); ++i) {
    int c = images_[i - 1];
    inv[std::abs(c) - 1] = c < 0 ? -i : i;
  }
  return SignedPerm(std::move(inv));
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (rank() != o.rank()) throw InvalidArgument("rank mismatch in permutation product");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= rank(); ++i) out[i - 1] = (*this)(o(Letter::gen(i))).code();
  return SignedPerm(std::move(out));
}

int SignedPerm::sign_of_determinant() const {
  int sign = 1;
  std::vector<int> perm(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] < 0) sign = -sign;
    perm[i] = std::abs(images_[i]) - 1;
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<SignedPerm> enumerate_omega(int rank) {
  std::vector<SignedPerm> out;
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> all;
  do {
    for (unsigned signs = 0; signs < (1u << rank); ++signs) {
      std::vector<int> im(rank);
      for (int i = 0; i < rank; ++i) im[i] = (signs >> i & 1u) ? -perm[i] : perm[i];
      all.push_back(std::move(im));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(all.begin(), all.end());
  out.reserve(all.size());
  for (auto& im : all) out.emplace_back(std::move(im));
  return out;
}

// ---------------------------------------------------------------- Lambda

LambdaAuto make_lambda(LetterMask set, Letter a, int rank) {
  if (rank < 1 || rank > kMaxRank) throw InvalidArgument("rank out of supported range");
  if (a.code() == 0 || a.index() > rank) throw InvalidArgument("multiplier outside rank");
  if ((set & ~full_mask(rank)) != 0) throw InvalidArgument("subset A outside L");
  if (!contains(set, a)) throw InvalidArgument("malformed (A;a): a not in A");
  if (contains(set, a.inverse())) throw InvalidArgument("malformed (A;a): a^{-1} in A");
  return LambdaAuto{set, a};
}

std::vector<LambdaAuto> enumerate_lambda(int rank) {
  std::vector<LambdaAuto> out;
  for (Letter a : letters_of_rank(rank)) {
    // Free letters: all except a and a^{-1}.
    std::vector<Letter> free;
    for (Letter x : letters_of_rank(rank)) {
      if (x != a && x != a.inverse()) free.push_back(x);
    }
    const std::uint64_t count = std::uint64_t{1} << free.size();
    for (std::uint64_t s = 0; s < count; ++s) {
      LetterMask m = bit(a);
      for (std::size_t i = 0; i < free.size(); ++i) {
        if (s >> i & 1u) m |= bit(free[i]);
      }
      out.push_back(LambdaAuto{m, a});
    }
  }
  std::sort(out.begin(), out.end(), [](const LambdaAuto& x, const LambdaAuto& y) {
    return std::tuple(x.multiplier.key(), x.set) < std::tuple(y.multiplier.key(), y.set);
  });
  return out;
}

LambdaAuto lambda_inverse(const LambdaAuto& w) {
  LetterMask m = (w.set & ~bit(w.multiplier)) | bit(w.multiplier.inverse());
  return LambdaAuto{m, w.multiplier.inverse()};
}

int lambda_case(const LambdaAuto& w, Letter x) {
  const Letter a = w.multiplier;
  if (x == a || x == a.inverse()) return 0;
  const bool in = contains(w.set, x);
  const bool inv_in = contains(w.set, x.inverse());
  if (in && inv_in) return 1;
  if (in) return 2;
  if (inv_in) return 3;
  return 4;
}

namespace {

template <class Sink>
void emit_lambda(const LambdaAuto& w, Letter x, Sink&& push) {
  const Letter a = w.multiplier;
  switch (lambda_case(w, x)) {
    case 1:
      push(a.inverse());
      push(x);
      push(a);
      break;
    case 2:
      push(x);
      push(a);
      break;
    case 3:
      push(a.inverse());
      push(x);
      break;
    default:
      push(x);
  }
}

}  // namespace

Word whitehead_apply(const LambdaAuto& w, Letter x, int rank) {
  WordBuilder b(rank);
  emit_lambda(w, x, [&](Letter y) { b.push(y); });
  return std::move(b).build();
}

Word whitehead_apply(const WhiteheadAuto& w, Letter x, int rank) {
  if (auto* l = std::get_if<LambdaAuto>(&w)) return whitehead_apply(*l, x, rank);
  return Word::letter(std::get<SignedPerm>(w)(x), rank);
}

Word whitehead_apply(const WhiteheadAuto& w, const Word& u) {
  WordBuilder b(u.rank());
  if (auto* l = std::get_if<LambdaAuto>(&w)) {
    for (Letter x : u.letters()) emit_lambda(*l, x, [&](Letter y) { b.push(y); });
  } else {
    const auto& p = std::get<SignedPerm>(w);
    for (Letter x : u.letters()) b.push(p(x));
  }
  return std::move(b).build();
}

std::size_t whitehead_image_length(const LambdaAuto& w, const Word& u) {
  // A small fixed stack would do, but the builder keeps the cancellation logic
  // in one place.
  thread_local std::vector<Letter> stack;
  stack.clear();
  auto push = [&](Letter y) {
    if (!stack.empty() && stack.back() == y.inverse()) stack.pop_back();
    else stack.push_back(y);
  };
  for (Letter x : u.letters()) emit_lambda(w, x, push);
  return stack.size();
}

// ---------------------------------------------------------------- tokens

bool Token::operator<(const Token& o) const {
  auto key = [](const Token& t) {
    return std::tuple(static_cast<int>(t.kind), t.a.key(), t.b.key(), t.set, t.perm.images());
  };
  return key(*this) < key(o);
}

Token inverse(const Token& t) {
  switch (t.kind) {
    case Token::Kind::E:
      return Token::E(t.a, t.b.inverse());
    case Token::Kind::M:
      return Token::M(t.a, t.b.inverse());
    case Token::Kind::w:
      return Token::w_(t.a, t.b.inverse());
    case Token::Kind::W:
      return Token::W(lambda_inverse(LambdaAuto{t.set, t.a}));
    case Token::Kind::P:
      return Token::P(t.perm.inverse());
  }
  return t;
}

std::string format_token(const Token& t) {
  switch (t.kind) {
    case Token::Kind::E:
      return "E(" + format_letter(t.a) + "," + format_letter(t.b) + ")";
    case Token::Kind::M:
      return "M(" + format_letter(t.a) + "," + format_letter(t.b) + ")";
    case Token::Kind::w:
      return "w(" + format_letter(t.a) + "," + format_letter(t.b) + ")";
    case Token::Kind::W: {
      std::string s = "W({";
      bool first = true;
      for (Letter x : mask_letters(t.set)) {
        if (!first) s += ",";
        s += format_letter(x);
        first = false;
      }
      return s + "};" + format_letter(t.a) + ")";
    }
    case Token::Kind::P: {
      std::string s = "P(";
      for (std::size_t i = 0; i < t.perm.images().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.perm.images()[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

Letter parse_single_letter(std::string_view s, int rank, std::size_t pos) {
  Word w = parse_word(trim(s), rank);
  if (w.length() != 1) throw ParseError("expected a single letter, got '" + std::string(s) + "'", pos);
  return w[0];
}

}  // namespace

Token parse_token(std::string_view text, int rank) {
  text = trim(text);
  if (text.size() < 4 || text[1] != '(' || text.back() != ')') {
    throw ParseError("malformed generator token '" + std::string(text) + "'", 0);
  }
  const char kind = text[0];
  std::string_view body = text.substr(2, text.size() - 3);
  if (kind == 'E' || kind == 'M' || kind == 'w') {
    auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected two letters", 2);
    Letter a = parse_single_letter(body.substr(0, comma), rank, 2);
    Letter b = parse_single_letter(body.substr(comma + 1), rank, 3 + comma);
    if (a == b || a == b.inverse()) throw InvalidArgument("token letters must satisfy a != b^{+-1}");
    if (kind == 'E') return Token::E(a, b);
    if (kind == 'M') return Token::M(a, b);
    return Token::w_(a, b);
  }
  if (kind == 'W') {
    auto open = body.find('{');
    auto close = body.find('}');
    auto semi = body.find(';');
    if (open != 0 || close == std::string_view::npos || semi != close + 1) {
      throw ParseError("expected W({...};a)", 2);
    }
    LetterMask m = 0;
    std::string_view inner = body.substr(1, close - 1);
    std::size_t start = 0;
    while (start <= inner.size() && !trim(inner).empty()) {
      auto c = inner.find(',', start);
      std::string_view part = inner.substr(start, c == std::string_view::npos ? std::string_view::npos : c - start);
      m |= bit(parse_single_letter(part, rank, 3 + start));
      if (c == std::string_view::npos) break;
      start = c + 1;
    }
    Letter a = parse_single_letter(body.substr(semi + 1), rank, 3 + semi);
    return Token::W(make_lambda(m, a, rank));
  }
  if (kind == 'P') {
    std::vector<int> im;
    std::size_t start = 0;
    while (true) {
      auto c = body.find(',', start);
      std::string part(trim(body.substr(start, c == std::string_view::npos ? std::string_view::npos : c - start)));
      try {
        im.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw ParseError("bad permutation entry '" + part + "'", 2 + start);
      }
      if (c == std::string_view::npos) break;
      start = c + 1;
    }
    if (static_cast<int>(im.size()) != rank) throw InvalidArgument("permutation size differs from rank");
    return Token::P(SignedPerm(std::move(im)));
  }
  throw ParseError("unknown generator kind '" + std::string(1, kind) + "'", 0);
}

// ---------------------------------------------------------------- Automorphism

Automorphism Automorphism::identity(int rank) {
  Automorphism f;
  f.rank_ = rank;
  for (int i = 1; i <= rank; ++i) f.images_.push_back(Word::letter(Letter::gen(i), rank));
  f.factorization_ = std::vector<Token>{};
  return f;
}

Automorphism Automorphism::from_images(int rank, std::vector<Word> images) {
  if (static_cast<int>(images.size()) != rank) throw InvalidArgument("need one image per generator");
  for (const Word& w : images) {
    if (w.rank() != rank) throw InvalidArgument("image rank mismatch");
  }
  Automorphism f;
  f.rank_ = rank;
  f.images_ = std::move(images);
  return f;
}

namespace {

void check_pair(Letter a, Letter b, int rank) {
  if (a.code() == 0 || b.code() == 0 || a.index() > rank || b.index() > rank) {
    throw InvalidArgument("letters outside rank");
  }
  if (a == b || a == b.inverse()) throw InvalidArgument("requires a != b^{+-1}");
}

// Images of generators for a map given on one letter x (x -> image) and fixing
// every other generator.
std::vector<Word> single_letter_images(Letter x, const Word& image_of_x, int rank) {
  std::vector<Word> im;
  for (int i = 1; i <= rank; ++i) im.push_back(Word::letter(Letter::gen(i), rank));
  im[x.index() - 1] = x.is_inverse() ? image_of_x.inverse() : image_of_x;
  return im;
}

std::vector<Word> token_images(const Token& t, int rank) {
  switch (t.kind) {
    case Token::Kind::E: {
      check_pair(t.a, t.b, rank);
      return single_letter_images(t.a, Word::reduce({t.a.code(), t.b.code()}, rank), rank);
    }
    case Token::Kind::M: {
      check_pair(t.a, t.b, rank);
      return single_letter_images(t.a, Word::reduce({t.b.code(), t.a.code()}, rank), rank);
    }
    case Token::Kind::w: {
      SignedPerm p = w_as_perm(t.a, t.b, rank);
      std::vector<Word> out;
      for (int i = 1; i <= rank; ++i) out.push_back(Word::letter(p(Letter::gen(i)), rank));
      return out;
    }
    case Token::Kind::W: {
      LambdaAuto l = make_lambda(t.set, t.a, rank);
      std::vector<Word> out;
      for (int i = 1; i <= rank; ++i) out.push_back(whitehead_apply(l, Letter::gen(i), rank));
      return out;
    }
    case Token::Kind::P: {
      if (t.perm.rank() != rank) throw InvalidArgument("permutation rank mismatch");
      std::vector<Word> out;
      for (int i = 1; i <= rank; ++i) out.push_back(Word::letter(t.perm(Letter::gen(i)), rank));
      return out;
    }
  }
  return {};
}

}  // namespace

SignedPerm w_as_perm(Letter a, Letter b, int rank) {
  check_pair(a, b, rank);
  std::vector<int> im(rank);
  std::iota(im.begin(), im.end(), 1);
  const Letter ia = b.inverse();
  const Letter ib = a;
  im[a.index() - 1] = a.is_inverse() ? -ia.code() : ia.code();
  im[b.index() - 1] = b.is_inverse() ? -ib.code() : ib.code();
  return SignedPerm(std::move(im));
}

WhiteheadAuto to_whitehead(const Token& t, int rank) {
  switch (t.kind) {
    case Token::Kind::E:
      check_pair(t.a, t.b, rank);
      return make_lambda(mask_of({t.a, t.b}), t.b, rank);
    case Token::Kind::M:
      check_pair(t.a, t.b, rank);
      return make_lambda(mask_of({t.a.inverse(), t.b.inverse()}), t.b.inverse(), rank);
    case Token::Kind::w:
      return w_as_perm(t.a, t.b, rank);
    case Token::Kind::W:
      return make_lambda(t.set, t.a, rank);
    case Token::Kind::P:
      return t.perm;
  }
  return SignedPerm::identity(rank);
}

Automorphism Automorphism::from_token(const Token& t, int rank) {
  Automorphism f = from_images(rank, token_images(t, rank));
  f.factorization_ = std::vector<Token>{t};
  return f;
}

Automorphism Automorphism::from_tokens(const std::vector<Token>& tokens, int rank) {
  Automorphism acc = identity(rank);
  for (const Token& t : tokens) acc = compose(acc, from_token(t, rank));
  return acc;
}

Automorphism Automorphism::from_whitehead(const WhiteheadAuto& w, int rank) {
  if (auto* l = std::get_if<LambdaAuto>(&w)) return from_token(Token::W(*l), rank);
  return from_token(Token::P(std::get<SignedPerm>(w)), rank);
}

const std::vector<Token>& Automorphism::factorization() const {
  if (!factorization_) throw InvalidArgument("automorphism carries no factorization");
  return *factorization_;
}

Automorphism Automorphism::with_factorization(std::vector<Token> f) const {
  Automorphism out = *this;
  out.factorization_ = std::move(f);
  return out;
}

Word Automorphism::apply(const Word& u) const {
  if (u.rank() != rank_) throw InvalidArgument("rank mismatch in apply");
  WordBuilder b(rank_);
  for (Letter x : u.letters()) {
    const Word& im = images_[x.index() - 1];
    if (x.is_inverse()) b.append_inverse(im);
    else b.append(im);
  }
  return std::move(b).build();
}

Word Automorphism::apply(Letter x) const {
  const Word& im = images_.at(x.index() - 1);
  return x.is_inverse() ? im.inverse() : im;
}

WordTuple Automorphism::apply(const WordTuple& t) const {
  std::vector<Word> out;
  out.reserve(t.size());
  for (const Word& w : t.entries()) out.push_back(apply(w));
  return WordTuple(rank_, std::move(out));
}

Automorphism make_E(Letter a, Letter b, int rank) { return Automorphism::from_token(Token::E(a, b), rank); }
Automorphism make_M(Letter a, Letter b, int rank) { return Automorphism::from_token(Token::M(a, b), rank); }
Automorphism make_w(Letter a, Letter b, int rank) { return Automorphism::from_token(Token::w_(a, b), rank); }

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.rank() != g.rank()) throw InvalidArgument("rank mismatch in compose");
  std::vector<Word> im;
  im.reserve(f.rank());
  for (const Word& w : g.images()) im.push_back(f.apply(w));
  Automorphism out = Automorphism::from_images(f.rank(), std::move(im));
  if (f.has_factorization() && g.has_factorization()) {
    std::vector<Token> tokens = f.factorization();
    tokens.insert(tokens.end(), g.factorization().begin(), g.factorization().end());
    out = out.with_factorization(std::move(tokens));
  }
  return out;
}

Automorphism invert_auto(const Automorphism& f) {
  if (!f.has_factorization()) throw InvalidArgument("cannot invert: no factorization available");
  std::vector<Token> inv;
  const auto& tokens = f.factorization();
  inv.reserve(tokens.size());
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) inv.push_back(inverse(*it));
  Automorphism g = Automorphism::from_tokens(inv, f.rank());
  if (!(compose(f, g) == Automorphism::identity(f.rank()))) {
    throw InvalidArgument("factorization does not realize the stored images");
  }
  return g;
}

std::vector<std::vector<long long>> abelianization(const Automorphism& f) {
  const int n = f.rank();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    for (Letter x : f.images()[j].letters()) m[x.index() - 1][j] += x.sign();
  }
  return m;
}

BigInt determinant(const std::vector<std::vector<long long>>& m) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_special(const Automorphism& f) { return determinant(abelianization(f)) == 1; }

bool fixes_prefix(const Automorphism& f, int l) {
  for (int i = 1; i <= l && i <= f.rank(); ++i) {
    const Word& w = f.image(i);
    if (w.length() != 1 || w[0] != Letter::gen(i)) return false;
  }
  return true;
}

}  // namespace pbc
