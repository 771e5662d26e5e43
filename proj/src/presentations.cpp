#include "pbc/presentations.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "pbc/errors.hpp"

namespace pbc {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 31> kFamilyNames{{
    {Family::R1, "R1"},           {Family::R2, "R2"},           {Family::R3, "R3"},
    {Family::R4, "R4"},           {Family::R5, "R5"},           {Family::R6, "R6"},
    {Family::R7, "R7"},           {Family::R8, "R8"},           {Family::R9, "R9"},
    {Family::R10, "R10"},         {Family::S0, "S0"},           {Family::S1, "S1"},
    {Family::S2, "S2"},           {Family::S3, "S3"},           {Family::S4, "S4"},
    {Family::S5, "S5"},           {Family::C2_9_1, "C2_9_1"},   {Family::C2_9_2, "C2_9_2"},
    {Family::C2_9_3, "C2_9_3"},   {Family::T2_10_1, "T2_10_1"}, {Family::T2_10_2, "T2_10_2"},
    {Family::T2_10_3, "T2_10_3"}, {Family::T2_10_4, "T2_10_4"}, {Family::T2_10_5p, "T2_10_5p"},
    {Family::T2_10_6, "T2_10_6"}, {Family::T2_11_1, "T2_11_1"}, {Family::T2_11_2, "T2_11_2"},
    {Family::T2_11_3, "T2_11_3"}, {Family::T2_11_4, "T2_11_4"}, {Family::T2_11_5, "T2_11_5"},
    {Family::T2_11_6, "T2_11_6"},
}};

constexpr std::array<std::pair<Theorem, std::string_view>, 7> kTheoremNames{{
    {Theorem::T2_1, "2.1"},
    {Theorem::T2_4, "2.4"},
    {Theorem::T2_5, "2.5"},
    {Theorem::T2_7, "2.7"},
    {Theorem::T2_9, "2.9"},
    {Theorem::T2_10, "2.10"},
    {Theorem::T2_11, "2.11"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (auto& [k, v] : kFamilyNames)
    if (k == f) return v;
  return "?";
}

Family parse_family(std::string_view s) {
  for (auto& [k, v] : kFamilyNames)
    if (v == s) return k;
  throw InvalidArgument("unknown relation family '" + std::string(s) + "'");
}

std::string_view theorem_name(Theorem t) {
  for (auto& [k, v] : kTheoremNames)
    if (k == t) return v;
  return "?";
}

Theorem parse_theorem(std::string_view s) {
  for (auto& [k, v] : kTheoremNames)
    if (v == s) return k;
  throw InvalidArgument("unknown theorem '" + std::string(s) + "'");
}

std::vector<Family> theorem_families(Theorem t) {
  using F = Family;
  switch (t) {
    case Theorem::T2_1:
      return {F::R1, F::R2, F::R3, F::R4, F::R5, F::R6, F::R7, F::R8, F::R9, F::R10};
    case Theorem::T2_4:
      return {F::R1, F::R2, F::R3, F::R4, F::R5, F::R6, F::R7};
    case Theorem::T2_5:
    case Theorem::T2_7:
      return {F::S0, F::S1, F::S2, F::S3, F::S4, F::S5};
    case Theorem::T2_9:
      return {F::C2_9_1, F::C2_9_2, F::C2_9_3};
    case Theorem::T2_10:
      return {F::T2_10_1, F::T2_10_2, F::T2_10_3, F::T2_10_4, F::T2_10_5p, F::T2_10_6};
    case Theorem::T2_11:
      return {F::T2_11_1, F::T2_11_2, F::T2_11_3, F::T2_11_4, F::T2_11_5, F::T2_11_6};
  }
  return {};
}

bool is_consequence(Family f) { return f == Family::R8 || f == Family::R9 || f == Family::R10; }

std::string format_instance(const RelationInstance& r) {
  auto side = [](const std::vector<Token>& ts) {
    if (ts.empty()) return std::string("1");
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i) s += " ";
      s += format_token(ts[i]);
    }
    return s;
  };
  return std::string(family_name(r.family)) + ": " + side(r.lhs) + " = " + side(r.rhs);
}

namespace {

std::string fmt_set(LetterMask m) {
  std::string s = "{";
  bool first = true;
  for (Letter x : mask_letters(m)) {
    if (!first) s += ",";
    s += format_letter(x);
    first = false;
  }
  return s + "}";
}

std::string fmt_perm(const SignedPerm& p) { return format_token(Token::P(p)).substr(1); }

bool orbit_distinct(Letter x, Letter y) { return x.index() != y.index(); }

Token lam(LetterMask set, Letter a) { return Token::W(LambdaAuto{set, a}); }

// Enumeration context: rank, prefix, and the subgroup of Omega in play.
struct Ctx {
  int n;
  int l;
  Theorem theorem;
  std::vector<Letter> L;       // all letters
  std::vector<Letter> Lp;      // letters outside the fixed prefix
  std::vector<LambdaAuto> lambda;
  std::vector<SignedPerm> omega;  // the relevant subgroup of Omega(F_n)
};

bool perm_fixes_prefix(const SignedPerm& p, int l) {
  for (int i = 1; i <= l; ++i)
    if (p.images()[i - 1] != i) return false;
  return true;
}

using Sink = std::function<void(RelationInstance)>;

void emit(const Sink& out, Family f, std::vector<Token> lhs, std::vector<Token> rhs, std::string params) {
  out(RelationInstance{f, std::move(lhs), std::move(rhs), std::move(params)});
}

// ---- R1-R10 families

void gen_R1(const Ctx& c, const Sink& out) {
  for (const auto& x : c.lambda) {
    emit(out, Family::R1, {lam(x.set, x.multiplier), Token::W(lambda_inverse(x))}, {},
         "A=" + fmt_set(x.set) + "; a=" + format_letter(x.multiplier));
  }
}

void gen_R2(const Ctx& c, const Sink& out) {
  for (const auto& x : c.lambda) {
    for (const auto& y : c.lambda) {
      if (x.multiplier != y.multiplier) continue;
      if ((x.set & y.set) != bit(x.multiplier)) continue;
      emit(out, Family::R2, {lam(x.set, x.multiplier), lam(y.set, y.multiplier)},
           {lam(x.set | y.set, x.multiplier)},
           "A=" + fmt_set(x.set) + "; B=" + fmt_set(y.set) + "; a=" + format_letter(x.multiplier));
    }
  }
}

void gen_R3(const Ctx& c, const Sink& out) {
  for (const auto& x : c.lambda) {
    for (const auto& y : c.lambda) {
      const Letter a = x.multiplier, b = y.multiplier;
      if ((x.set & y.set) != 0 || contains(y.set, a.inverse()) || contains(x.set, b.inverse())) continue;
      emit(out, Family::R3, {lam(x.set, a), lam(y.set, b)}, {lam(y.set, b), lam(x.set, a)},
           "A=" + fmt_set(x.set) + "; a=" + format_letter(a) + "; B=" + fmt_set(y.set) +
               "; b=" + format_letter(b));
    }
  }
}

void gen_R4(const Ctx& c, const Sink& out) {
  for (const auto& x : c.lambda) {
    for (const auto& y : c.lambda) {
      const Letter a = x.multiplier, b = y.multiplier;
      if ((x.set & y.set) != 0 || contains(y.set, a.inverse()) || !contains(x.set, b.inverse())) continue;
      const LetterMask u = (x.set | y.set) & ~bit(b);
      emit(out, Family::R4, {lam(y.set, b), lam(x.set, a)}, {lam(u, a), lam(y.set, b)},
           "A=" + fmt_set(x.set) + "; a=" + format_letter(a) + "; B=" + fmt_set(y.set) +
               "; b=" + format_letter(b));
    }
  }
}

void gen_R5(const Ctx& c, const Sink& out) {
  for (const auto& x : c.lambda) {
    const Letter a = x.multiplier;
    for (Letter b : c.L) {
      if (b == a || !contains(x.set, b) || contains(x.set, b.inverse())) continue;
      const LetterMask s1 = (x.set & ~bit(a)) | bit(a.inverse());
      const LetterMask s2 = (x.set & ~bit(b)) | bit(b.inverse());
      emit(out, Family::R5, {lam(s1, b), lam(x.set, a)}, {lam(s2, a), Token::P(w_as_perm(a, b, c.n))},
           "A=" + fmt_set(x.set) + "; a=" + format_letter(a) + "; b=" + format_letter(b));
    }
  }
}

LetterMask perm_set(const SignedPerm& p, LetterMask m) {
  LetterMask r = 0;
  for (Letter x : mask_letters(m)) r |= bit(p(x));
  return r;
}

void gen_R6(const Ctx& c, const Sink& out) {
  for (const auto& t : c.omega) {
    for (const auto& x : c.lambda) {
      emit(out, Family::R6, {Token::P(t), lam(x.set, x.multiplier)},
           {lam(perm_set(t, x.set), t(x.multiplier)), Token::P(t)},
           "T=" + fmt_perm(t) + "; A=" + fmt_set(x.set) + "; a=" + format_letter(x.multiplier));
    }
  }
}

void gen_table(const Ctx& c, Family f, const Sink& out) {
  for (const auto& s : c.omega) {
    for (const auto& t : c.omega) {
      emit(out, f, {Token::P(s), Token::P(t)}, {Token::P(s * t)},
           "sigma=" + fmt_perm(s) + "; tau=" + fmt_perm(t));
    }
  }
}

void gen_R8(const Ctx& c, const Sink& out) {
  const LetterMask full = full_mask(c.n);
  for (const auto& x : c.lambda) {
    const Letter a = x.multiplier;
    const Token lhs = lam(x.set, a);
    const Token p = lam(full & ~x.set, a.inverse());
    const Token q = lam(full & ~bit(a.inverse()), a);
    const std::string params = "A=" + fmt_set(x.set) + "; a=" + format_letter(a);
    emit(out, Family::R8, {lhs}, {p, q}, params);
    emit(out, Family::R8, {lhs}, {q, p}, params);
  }
}

void gen_R9_R10(const Ctx& c, Family f, const Sink& out) {
  const LetterMask full = full_mask(c.n);
  for (const auto& x : c.lambda) {
    const Letter a = x.multiplier;
    for (Letter b : c.L) {
      if (f == Family::R9 && (contains(x.set, b) || contains(x.set, b.inverse()))) continue;
      if (f == Family::R10 && (b == a || !contains(x.set, b) || contains(x.set, b.inverse()))) continue;
      std::vector<Token> lhs{lam(full & ~bit(b.inverse()), b), lam(x.set, a), lam(full & ~bit(b), b.inverse())};
      std::vector<Token> rhs{f == Family::R9 ? lam(x.set, a) : lam(full & ~x.set, a.inverse())};
      emit(out, f, std::move(lhs), std::move(rhs),
           "A=" + fmt_set(x.set) + "; a=" + format_letter(a) + "; b=" + format_letter(b));
    }
  }
}

// ---- M/w families

void gen_inverse_pair(const Ctx& c, Family f, const Sink& out) {
  for (Letter a : c.Lp) {
    for (Letter b : c.L) {
      if (!orbit_distinct(a, b)) continue;
      emit(out, f, {Token::M(a, b), Token::M(a, b.inverse())}, {},
           "a=" + format_letter(a) + "; b=" + format_letter(b));
    }
  }
}

void gen_commute(const Ctx& c, Family f, const Sink& out) {
  for (Letter a : c.Lp)
    for (Letter b : c.L) {
      if (!orbit_distinct(a, b)) continue;
      for (Letter cc : c.Lp)
        for (Letter d : c.L) {
          if (!orbit_distinct(cc, d)) continue;
          if (!orbit_distinct(b, cc) || !orbit_distinct(a, d) || a == cc) continue;
          emit(out, f, {Token::M(a, b), Token::M(cc, d)}, {Token::M(cc, d), Token::M(a, b)},
               "a=" + format_letter(a) + "; b=" + format_letter(b) + "; c=" + format_letter(cc) +
                   "; d=" + format_letter(d));
        }
    }
}

void gen_commutator_identity(const Ctx& c, Family f, const Sink& out) {
  for (Letter a : c.L)
    for (Letter b : c.Lp)
      for (Letter cc : c.Lp) {
        if (!orbit_distinct(a, b) || !orbit_distinct(a, cc) || !orbit_distinct(b, cc)) continue;
        const Token x = Token::M(b, a.inverse());
        const Token y = Token::M(cc, b.inverse());
        emit(out, f, {x, y}, {Token::M(cc, a), y, x},
             "a=" + format_letter(a) + "; b=" + format_letter(b) + "; c=" + format_letter(cc));
      }
}

void gen_w_product(const Ctx& c, Family f, const Sink& out) {
  for (Letter a : c.Lp)
    for (Letter b : c.Lp) {
      if (!orbit_distinct(a, b)) continue;
      emit(out, f, {Token::w_(a, b)},
           {Token::M(b.inverse(), a.inverse()), Token::M(a.inverse(), b), Token::M(b, a)},
           "a=" + format_letter(a) + "; b=" + format_letter(b));
    }
}

void gen_conj_M(const Ctx& c, Family f, const Sink& out) {
  for (const auto& s : c.omega)
    for (Letter a : c.Lp)
      for (Letter b : c.L) {
        if (!orbit_distinct(a, b)) continue;
        emit(out, f, {Token::P(s), Token::M(a, b)}, {Token::M(s(a), s(b)), Token::P(s)},
             "sigma=" + fmt_perm(s) + "; a=" + format_letter(a) + "; b=" + format_letter(b));
      }
}

void gen_w_inverse(const Ctx& c, Family f, const Sink& out) {
  for (Letter a : c.Lp)
    for (Letter b : c.Lp) {
      if (!orbit_distinct(a, b)) continue;
      emit(out, f, {Token::w_(a, b.inverse()), Token::w_(a, b)}, {},
           "a=" + format_letter(a) + "; b=" + format_letter(b));
    }
}

void gen_w_conj_w(const Ctx& c, Family f, const Sink& out) {
  for (Letter a : c.Lp)
    for (Letter b : c.Lp) {
      if (!orbit_distinct(a, b)) continue;
      const SignedPerm w = w_as_perm(a, b, c.n);
      for (Letter x : c.Lp)
        for (Letter y : c.Lp) {
          if (!orbit_distinct(x, y)) continue;
          emit(out, f, {Token::w_(a, b), Token::w_(x, y)}, {Token::w_(w(x), w(y)), Token::w_(a, b)},
               "a=" + format_letter(a) + "; b=" + format_letter(b) + "; c=" + format_letter(x) +
                   "; d=" + format_letter(y));
        }
    }
}

void gen_w_order(const Ctx& c, Family f, const Sink& out) {
  for (Letter a : c.Lp)
    for (Letter b : c.Lp) {
      if (!orbit_distinct(a, b)) continue;
      const Token w = Token::w_(a, b);
      emit(out, f, {w, w, w, w}, {}, "a=" + format_letter(a) + "; b=" + format_letter(b));
    }
}

void gen_w_conj_M(const Ctx& c, Family f, const Sink& out) {
  for (Letter a : c.Lp)
    for (Letter b : c.Lp) {
      if (!orbit_distinct(a, b)) continue;
      const SignedPerm w = w_as_perm(a, b, c.n);
      for (Letter x : c.Lp)
        for (Letter y : c.L) {
          if (!orbit_distinct(x, y)) continue;
          emit(out, f, {Token::w_(a, b), Token::M(x, y)}, {Token::M(w(x), w(y)), Token::w_(a, b)},
               "a=" + format_letter(a) + "; b=" + format_letter(b) + "; c=" + format_letter(x) +
                   "; d=" + format_letter(y));
        }
    }
}

void gen_w_sign(const Ctx& c, Family f, const Sink& out) {
  for (Letter a : c.Lp)
    for (Letter b : c.Lp) {
      if (!orbit_distinct(a, b)) continue;
      emit(out, f, {Token::w_(a, b)}, {Token::w_(a.inverse(), b.inverse())},
           "a=" + format_letter(a) + "; b=" + format_letter(b));
    }
}

void generate(const Ctx& c, Family f, const Sink& out) {
  using F = Family;
  switch (f) {
    case F::R1: return gen_R1(c, out);
    case F::R2: return gen_R2(c, out);
    case F::R3: return gen_R3(c, out);
    case F::R4: return gen_R4(c, out);
    case F::R5: return gen_R5(c, out);
    case F::R6: return gen_R6(c, out);
    case F::R7:
    case F::S0: return gen_table(c, f, out);
    case F::R8: return gen_R8(c, out);
    case F::R9:
    case F::R10: return gen_R9_R10(c, f, out);
    case F::S1:
    case F::T2_10_1:
    case F::T2_11_1: return gen_inverse_pair(c, f, out);
    case F::S2:
    case F::T2_10_2:
    case F::T2_11_2: return gen_commute(c, f, out);
    case F::S3:
    case F::T2_10_3:
    case F::T2_11_3: return gen_commutator_identity(c, f, out);
    case F::S4:
    case F::T2_10_4:
    case F::T2_11_4: return gen_w_product(c, f, out);
    case F::S5: return gen_conj_M(c, f, out);
    case F::C2_9_1: return gen_w_inverse(c, f, out);
    case F::C2_9_2: return gen_w_conj_w(c, f, out);
    case F::C2_9_3:
    case F::T2_10_6:
    case F::T2_11_6: return gen_w_order(c, f, out);
    case F::T2_10_5p: return gen_w_conj_M(c, f, out);
    case F::T2_11_5: return gen_w_sign(c, f, out);
  }
}

bool is_table(Family f) { return f == Family::R7 || f == Family::S0; }

bool token_less(const std::vector<Token>& x, const std::vector<Token>& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace

bool generator_legal(const Token& tok, Theorem t, int n, int l) {
  Automorphism f;
  try {
    f = Automorphism::from_token(tok, n);
  } catch (const InvalidArgument&) {
    return false;
  }
  switch (t) {
    case Theorem::T2_1:
      return tok.kind == Token::Kind::W || tok.kind == Token::Kind::P;
    case Theorem::T2_4:
      return (tok.kind == Token::Kind::W || tok.kind == Token::Kind::P) && fixes_prefix(f, l);
    case Theorem::T2_5:
    case Theorem::T2_7: {
      const bool special_needed = t == Theorem::T2_7;
      if (tok.kind == Token::Kind::M) return tok.a.index() > l && (!special_needed || is_special(f));
      if (tok.kind == Token::Kind::P || tok.kind == Token::Kind::w) {
        return fixes_prefix(f, l) && (!special_needed || is_special(f));
      }
      return false;
    }
    case Theorem::T2_9:
      return tok.kind == Token::Kind::w && tok.a.index() > l && tok.b.index() > l && is_special(f);
    case Theorem::T2_10:
    case Theorem::T2_11:
      if (tok.kind == Token::Kind::M) return tok.a.index() > l && is_special(f);
      if (tok.kind == Token::Kind::w) return tok.a.index() > l && tok.b.index() > l && is_special(f);
      return false;
  }
  return false;
}

std::vector<RelationInstance> enumerate_relations(Theorem t, const std::vector<Family>& families, int n,
                                                  int l, const PresentationOptions& opt) {
  if (n < 1 || n > 8) throw InvalidArgument("rank n must be in 1..8 for relation enumeration");
  if (l < 0 || l > n) throw InvalidArgument("need 0 <= l <= n");
  if (t == Theorem::T2_1 && l != 0) throw InvalidArgument("this presentation has no fixed prefix; use l = 0");
  if (t == Theorem::T2_11 && n - l < 3) throw InvalidArgument("relations (1)-(6) require n - l >= 3");
  const auto allowed = theorem_families(t);
  for (Family f : families) {
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
      throw InvalidArgument("family " + std::string(family_name(f)) + " does not belong to theorem " +
                            std::string(theorem_name(t)));
    }
  }

  Ctx c{n, l, t, letters_of_rank(n), {}, {}, {}};
  for (Letter x : c.L)
    if (x.index() > l) c.Lp.push_back(x);
  const bool need_lambda = std::any_of(families.begin(), families.end(), [](Family f) {
    return f >= Family::R1 && f <= Family::R10 && f != Family::R7;
  });
  const bool need_omega = std::any_of(families.begin(), families.end(), [](Family f) {
    return f == Family::R6 || f == Family::R7 || f == Family::S0 || f == Family::S5;
  });
  if (need_lambda) c.lambda = enumerate_lambda(n);
  if (need_omega) {
    for (auto& p : enumerate_omega(n)) {
      if (!perm_fixes_prefix(p, l)) continue;
      if (t == Theorem::T2_7 && p.sign_of_determinant() != 1) continue;
      c.omega.push_back(std::move(p));
    }
  }

  std::vector<RelationInstance> out;
  for (Family f : families) {
    if (is_table(f) && n > opt.max_table_rank) continue;
    std::vector<RelationInstance> batch;
    generate(c, f, [&](RelationInstance r) {
      if (t == Theorem::T2_4) {
        for (const auto* side : {&r.lhs, &r.rhs})
          for (const Token& tok : *side)
            if (!generator_legal(tok, t, n, l)) return;
      }
      batch.push_back(std::move(r));
    });
    std::sort(batch.begin(), batch.end(), [](const RelationInstance& x, const RelationInstance& y) {
      if (x.lhs != y.lhs) return token_less(x.lhs, y.lhs);
      return token_less(x.rhs, y.rhs);
    });
    batch.erase(std::unique(batch.begin(), batch.end(),
                            [](const RelationInstance& x, const RelationInstance& y) {
                              return x.lhs == y.lhs && x.rhs == y.rhs;
                            }),
                batch.end());
    for (auto& r : batch) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RelationInstance& x, const RelationInstance& y) { return x.family < y.family; });
  return out;
}

bool check_relation(const RelationInstance& r, int n) {
  return Automorphism::from_tokens(r.lhs, n) == Automorphism::from_tokens(r.rhs, n);
}

namespace {

// Empty string when the relation holds and every token is a legal generator.
std::string diagnose(const RelationInstance& r, Theorem t, int n, int l) {
  for (const auto* side : {&r.lhs, &r.rhs})
    for (const Token& tok : *side)
      if (!generator_legal(tok, t, n, l)) return "token " + format_token(tok) + " is not a generator";
  Automorphism f, g;
  try {
    f = Automorphism::from_tokens(r.lhs, n);
    g = Automorphism::from_tokens(r.rhs, n);
  } catch (const InvalidArgument& e) {
    return std::string("cannot realize tokens: ") + e.what();
  }
  for (int i = 1; i <= n; ++i) {
    if (f.image(i) != g.image(i)) {
      return "image of v" + std::to_string(i) + ": lhs " + format_word(f.image(i)) + ", rhs " +
             format_word(g.image(i));
    }
  }
  return {};
}

}  // namespace

VerificationReport verify_presentation(Theorem t, const std::vector<Family>& families, int n, int l, Exec exec,
                                       const PresentationOptions& opt) {
  VerificationReport rep;
  rep.theorem = t;
  rep.n = n;
  rep.l = l;
  const auto instances = enumerate_relations(t, families, n, l, opt);
  std::vector<std::string> reasons(instances.size());
  const long long total = static_cast<long long>(instances.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < total; ++i) reasons[i] = diagnose(instances[i], t, n, l);
  } else {
    for (long long i = 0; i < total; ++i) reasons[i] = diagnose(instances[i], t, n, l);
  }
  for (Family f : families) {
    FamilyCount fc{f};
    if (is_table(f) && n > opt.max_table_rank) rep.skipped.push_back(f);
    rep.counts.push_back(fc);
  }
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto it = std::find_if(rep.counts.begin(), rep.counts.end(),
                           [&](const FamilyCount& fc) { return fc.family == instances[i].family; });
    ++it->instances;
    ++rep.checked;
    if (!reasons[i].empty()) {
      ++it->failures;
      rep.failures.push_back({instances[i], reasons[i]});
    }
  }
  return rep;
}

}  // namespace pbc
