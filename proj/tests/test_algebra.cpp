#include <algorithm>

#include "doctest.h"
#include "pbc/autos.hpp"
#include "pbc/errors.hpp"
#include "pbc/freegroup.hpp"
#include "pbc/presentations.hpp"

using namespace pbc;

namespace {

Word w2(std::string_view s) { return parse_word(s, 2); }
Word w3(std::string_view s) { return parse_word(s, 3); }
const Letter a = Letter::gen(1), b = Letter::gen(2), c = Letter::gen(3);

}  // namespace

TEST_CASE("free reduction") {
  CHECK(Word::reduce({1, -1, 2}, 2) == w2("b"));
  CHECK(Word::reduce({}, 2).empty());
  CHECK(Word::reduce({1, 2, -2, 1}, 2) == w2("a a"));
  CHECK_THROWS_AS(Word::reduce({3}, 2), InvalidArgument);
  CHECK(format_word(Word::reduce({1, -2}, 2)) == "v1 v2^-1");
}

TEST_CASE("multiply and invert") {
  CHECK(multiply(w3("a b"), w3("b^-1 c")) == w3("a c"));
  CHECK(multiply(w3("a b"), Word::identity(3)) == w3("a b"));
  CHECK(multiply(w3("a b"), w3("b^-1 a^-1")).empty());
  CHECK(invert(w2("a b")) == w2("b^-1 a^-1"));
  CHECK(invert(Word::identity(2)).empty());
  CHECK(invert(w2("a^-1")) == w2("a"));
  CHECK(power(w2("a b"), -2) == w2("b^-1 a^-1 b^-1 a^-1"));
}

TEST_CASE("tuple length and shortlex") {
  CHECK(total_length(parse_tuple("a, b", 2)) == 2);
  CHECK(total_length(parse_tuple("a b, b^-1", 2)) == 3);
  CHECK(total_length(WordTuple(2)) == 0);
  CHECK(w2("a") < w2("a^-1"));
  CHECK(w2("b^-1") < w2("a a"));
  const auto words = all_reduced_words(2, 3);
  CHECK(words.size() == 36);
  CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_word("a q7 b", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  } catch (const InvalidArgument&) {
  }
  CHECK_THROWS(parse_word("a^-", 2));
}

TEST_CASE("Whitehead letter table") {
  // ({a,b}; b) on a, ({a^-1,b^-1}; b^-1) on a, ({a,b,b^-1}; a) on b.
  CHECK(whitehead_apply(make_lambda(mask_of({a, b}), b, 2), a, 2) == w2("a b"));
  CHECK(whitehead_apply(make_lambda(mask_of({a.inverse(), b.inverse()}), b.inverse(), 2), a, 2) == w2("b a"));
  CHECK(whitehead_apply(make_lambda(mask_of({a, b, b.inverse()}), a, 2), b, 2) == w2("a^-1 b a"));
  CHECK_THROWS_AS(make_lambda(mask_of({a, a.inverse()}), a, 2), InvalidArgument);
}

TEST_CASE("E, M, w generators") {
  const auto e = make_E(a, b, 2);
  CHECK(e.apply(a) == w2("a b"));
  CHECK(e.apply(b) == w2("b"));
  CHECK(make_M(a, b, 2).apply(a) == w2("b a"));
  CHECK(make_E(a, b, 2) == make_M(a.inverse(), b.inverse(), 2));
  const auto w = make_w(a, b, 2);
  CHECK(w.apply(a) == w2("b^-1"));
  CHECK(w.apply(b) == w2("a"));
  CHECK(compose(w, compose(w, compose(w, w))) == Automorphism::identity(2));
  CHECK(w == compose(make_M(b.inverse(), a.inverse(), 2), compose(make_M(a.inverse(), b, 2), make_M(b, a, 2))));
}

TEST_CASE("composition acts right to left") {
  const auto eab = make_E(a, c, 3), eac = make_E(a, b, 3);
  const auto fg = compose(eab, eac);
  for (Letter x : letters_of_rank(3)) CHECK(fg.apply(x) == eab.apply(eac.apply(x)));
  CHECK(fg.apply(a) != compose(eac, eab).apply(a));
  CHECK(compose(eab, Automorphism::identity(3)) == eab);
  CHECK(compose(make_M(a, b, 2), make_M(a, b.inverse(), 2)) == Automorphism::identity(2));
}

TEST_CASE("inverses") {
  CHECK(invert_auto(make_E(a, b, 2)) == make_E(a, b.inverse(), 2));
  CHECK(invert_auto(make_w(a, b, 2)) == make_w(a, b.inverse(), 2));
  for (const auto& x : enumerate_lambda(3)) {
    const auto f = Automorphism::from_whitehead(x, 3);
    CHECK(invert_auto(f) == Automorphism::from_whitehead(lambda_inverse(x), 3));
    CHECK(compose(f, invert_auto(f)) == Automorphism::identity(3));
  }
  CHECK_THROWS_AS(invert_auto(Automorphism::from_images(2, {w2("a b"), w2("b")})), InvalidArgument);
}

TEST_CASE("special and prefix-fixing") {
  CHECK(is_special(make_E(a, b, 2)));
  CHECK_FALSE(is_special(Automorphism::from_token(Token::P(SignedPerm({2, 1})), 2)));
  CHECK(fixes_prefix(make_M(c, a, 3), 2));
  CHECK_FALSE(fixes_prefix(make_M(a, c, 3), 1));
}

TEST_CASE("signed permutations") {
  std::size_t expect = 1;
  for (int n = 1; n <= 4; ++n) {
    expect *= 2 * n;
    const auto omega = enumerate_omega(n);
    CHECK(omega.size() == expect);
    CHECK(std::is_sorted(omega.begin(), omega.end()));
    CHECK(std::adjacent_find(omega.begin(), omega.end()) == omega.end());
  }
}

TEST_CASE("token text round trip") {
  for (const auto& x : enumerate_lambda(2)) {
    const Token t = Token::W(x);
    CHECK(parse_token(format_token(t), 2) == t);
  }
  CHECK(parse_token(format_token(Token::E(a, b.inverse())), 2) == Token::E(a, b.inverse()));
  CHECK(parse_token(format_token(Token::P(SignedPerm({-2, 1}))), 2) == Token::P(SignedPerm({-2, 1})));
}

TEST_CASE("relation instance counts") {
  CHECK(enumerate_relations(Theorem::T2_5, {Family::S1}, 2, 0).size() == 8);
  CHECK(enumerate_relations(Theorem::T2_11, {Family::T2_11_6}, 3, 0).size() == 24);
  CHECK(enumerate_relations(Theorem::T2_1, {Family::R7}, 2, 0).size() == 64);
}

TEST_CASE("named relation instances") {
  RelationInstance s3{Family::S3,
                      {Token::M(b, a.inverse()), Token::M(c, b.inverse())},
                      {Token::M(c, a), Token::M(c, b.inverse()), Token::M(b, a.inverse())},
                      ""};
  CHECK(check_relation(s3, 3));
  const LambdaAuto x = make_lambda(mask_of({a, b}), a, 2);
  RelationInstance r5{Family::R5,
                      {Token::W(make_lambda(mask_of({a.inverse(), b}), b, 2)), Token::W(x)},
                      {Token::W(make_lambda(mask_of({a, b.inverse()}), a, 2)), Token::w_(a, b)},
                      ""};
  CHECK(check_relation(r5, 2));
}

TEST_CASE("corrupted instances fail") {
  const auto inst = enumerate_relations(Theorem::T2_5, {Family::S2}, 3, 0);
  REQUIRE_FALSE(inst.empty());
  std::size_t broken = 0;
  for (const auto& r : inst) {
    RelationInstance m = r;
    Token& t = m.lhs.front();
    if (t.kind != Token::Kind::M) continue;
    t = Token::M(t.b, t.a);
    const bool same = Automorphism::from_tokens(m.lhs, 3) == Automorphism::from_tokens(m.rhs, 3);
    CHECK(check_relation(m, 3) == same);
    if (!same) ++broken;
  }
  CHECK(broken > 0);
}

TEST_CASE("presentation suites") {
  const auto r = verify_presentation(Theorem::T2_11, theorem_families(Theorem::T2_11), 3, 0);
  CHECK(r.pass());
  CHECK(r.checked > 0);
  const auto s = verify_presentation(Theorem::T2_5, theorem_families(Theorem::T2_5), 3, 1);
  CHECK(s.pass());
  for (const auto& inst : enumerate_relations(Theorem::T2_5, theorem_families(Theorem::T2_5), 3, 1))
    for (const auto* side : {&inst.lhs, &inst.rhs})
      for (const Token& t : *side) CHECK(fixes_prefix(Automorphism::from_token(t, 3), 1));
  const auto cons = verify_presentation(Theorem::T2_1, {Family::R8, Family::R9, Family::R10}, 2, 0);
  CHECK(cons.pass());
  CHECK(is_consequence(Family::R9));
}

TEST_CASE("serial and parallel verification agree") {
  for (Theorem t : {Theorem::T2_1, Theorem::T2_5}) {
    const auto s = verify_presentation(t, theorem_families(t), 2, t == Theorem::T2_5 ? 1 : 0, Exec::serial);
    const auto p = verify_presentation(t, theorem_families(t), 2, t == Theorem::T2_5 ? 1 : 0, Exec::parallel);
    CHECK(s.checked == p.checked);
    CHECK(s.failures.size() == p.failures.size());
    REQUIRE(s.counts.size() == p.counts.size());
    for (std::size_t i = 0; i < s.counts.size(); ++i) CHECK(s.counts[i].instances == p.counts[i].instances);
  }
}
