#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "ordsep/witness.hpp"

using namespace ordsep;
using namespace testutil;

namespace {

Elem el(const Presentation& p, const std::string& name) {
  auto e = p.find(name);
  REQUIRE(e.has_value());
  return *e;
}

LanguageRecognizer recognizer(const ParsedFile& f, const std::string& name) {
  return {f.pres, f.letters, f.accept(name).elements, name};
}

}  // namespace

TEST_CASE("expression evaluation") {
  ParsedFile f = load_data("sixelem.mon");
  const Presentation& p = f.pres;
  CHECK(eval_expr(mk_omega(mk_letter("a")), p, f.letters) == el(p, "a^w"));
  CHECK(eval_expr(mk_empty(), p, f.letters) == p.unit());
  CHECK(eval_expr(mk_concat(mk_omega(mk_letter("a")), mk_pow(mk_letter("a"), 3)),
                  p, f.letters) == el(p, "a^w.a"));
  CHECK_THROWS_AS(eval_expr(mk_letter("b"), p, f.letters), InputError);
}

TEST_CASE("expression syntax round-trips") {
  for (const std::string& text :
       {"a", "()", "a^3", "a^w", "(a)^w . a^5", "a.a^w", "(a.a)^w",
        "a a a", "(a^2)^w.a"}) {
    CAPTURE(text);
    Expr e = parse_word_expr(text);
    Expr back = parse_word_expr(print_word_expr(e));
    CHECK(same_expr(e, back));
  }
  CHECK_THROWS_AS(parse_word_expr(""), InputError);
  CHECK_THROWS_AS(parse_word_expr("a^"), InputError);
  CHECK_THROWS_AS(parse_word_expr("a^0"), InputError);
  CHECK_THROWS_AS(parse_word_expr("(a"), InputError);
  CHECK_THROWS_AS(parse_word_expr("a)"), InputError);
}

TEST_CASE("word normal forms") {
  auto eq = [](const std::string& a, const std::string& b) {
    return words_equal(parse_word_expr(a), parse_word_expr(b));
  };
  CHECK(eq("a.b.a", "a b a"));
  CHECK(eq("a^3", "a.a.a"));
  CHECK(eq("(a^2)^w", "a^w"));
  CHECK(eq("a.(b.a)^w", "(a.b)^w"));
  CHECK(eq("a.a^w", "a^w"));
  CHECK(eq("(a.b.a.b)^w", "(a.b)^w"));
  CHECK(eq("().a", "a"));
  CHECK(eq("(()^w)", "()"));
  CHECK_FALSE(eq("a^w.a", "a.a^w"));
  CHECK_FALSE(eq("(a.b)^w", "(b.a)^w"));
  CHECK_FALSE(eq("a^w", "a^w.a^w"));
  CHECK_FALSE(eq("a^2", "a^3"));
}

TEST_CASE("the finite-word game oracle") {
  auto game = [](const std::string& a, const std::string& b, unsigned k) {
    return ef_equiv_finite(parse_word_expr(a), parse_word_expr(b), k);
  };
  CHECK(game("a^3", "a^4", 2));
  CHECK_FALSE(game("a^2", "a^3", 2));
  CHECK(game("a", "a^2", 1));
  CHECK_FALSE(game("a.b", "b.a", 2));
  CHECK(game("a.b", "b.a", 1));
  CHECK_FALSE(game("a", "()", 1));
  CHECK(game("a.b.a", "a.b.a", 4));

  SUBCASE("bound violations") {
    CHECK_THROWS_AS(game("a^w", "a", 1), InputError);
    CHECK_THROWS_AS(game("a^100", "a", 1), InputError);
    CHECK_THROWS_AS(game("a", "a", 9), InputError);
  }

  SUBCASE("pumping threshold is sharp enough") {
    for (unsigned k = 1; k <= 3; ++k) {
      std::uint64_t n = (std::uint64_t{1} << k) - 1;
      for (const std::string& u : {"a", "b"}) {
        Expr base = mk_letter(u);
        CHECK(ef_equiv_finite(mk_pow(base, n), mk_pow(base, n + 1), k));
      }
    }
  }
}

TEST_CASE("derivation checking") {
  Expr a = mk_letter("a");
  unsigned k = 2;

  CHECK(check_derivation(d_refl(mk_pow(a, 3), k)));
  CHECK(check_derivation(d_pump(a, 3, true, k)));   // 3 >= 2^2 - 1
  CHECK_FALSE(check_derivation(d_pump(a, 2, true, k)));
  CHECK(check_derivation(d_pump(a, 3, false, k)));  // downward direction

  SUBCASE("structural steps demand equal words") {
    CHECK(check_derivation(
        d_struct(parse_word_expr("a.a.a"), parse_word_expr("a^3"), k)));
    std::string diag;
    CHECK_FALSE(check_derivation(
        d_struct(parse_word_expr("a.a"), parse_word_expr("a^3"), k), &diag));
    CHECK(diag.find("different words") != std::string::npos);
  }

  SUBCASE("congruence composes pumps") {
    Deriv d = d_concat(d_refl(mk_omega(a), k), d_pump(a, 4, true, k));
    CHECK(check_derivation(d));
    CHECK(check_derivation(d_reverse(d)));
  }

  SUBCASE("transitivity needs chaining middles") {
    Deriv good = d_trans(d_pump(a, 3, true, k), d_pump(a, 4, true, k));
    CHECK(check_derivation(good));
    Derivation broken = *good;
    broken.premises = {d_pump(a, 3, true, k), d_pump(a, 5, true, k)};
    std::string diag;
    CHECK_FALSE(check_derivation(
        std::make_shared<const Derivation>(broken), &diag));
    CHECK_FALSE(diag.empty());
  }
}

TEST_CASE("witness families cover their sets and certify at each depth") {
  for (const auto& file : corpus_files()) {
    CAPTURE(file);
    ParsedFile f = load_data(file);
    SaturationResult sat = saturate(f.pres, letter_seeds(f.letters));
    for (unsigned k = 0; k <= 3; ++k) {
      WitnessBuilder b(f.pres, f.letters, sat, k);
      for (int i = 0; i < static_cast<int>(sat.members.size()); ++i) {
        const WitnessFamily& fam = b.family(i);
        REQUIRE(fam.elems == elements_of(sat.members[i], f.pres.size()));
        for (std::size_t j = 0; j < fam.elems.size(); ++j)
          CHECK(eval_expr(fam.exprs[j], f.pres, f.letters) == fam.elems[j]);
        for (Elem x : fam.elems)
          for (Elem y : fam.elems) {
            std::string diag;
            bool ok = check_derivation(fam.pair(x, y), &diag);
            CAPTURE(diag);
            CAPTURE(print_word_expr(fam.expr_of(x)));
            CAPTURE(print_word_expr(fam.expr_of(y)));
            CHECK(ok);
          }
      }
    }
  }
}

TEST_CASE("finite witness families agree with the game oracle") {
  for (const auto& file : small_corpus_files()) {
    CAPTURE(file);
    ParsedFile f = load_data(file);
    SaturationResult sat = saturate(f.pres, letter_seeds(f.letters));
    for (unsigned k = 0; k <= 2; ++k) {
      WitnessBuilder b(f.pres, f.letters, sat, k);
      for (int i = 0; i < static_cast<int>(sat.members.size()); ++i) {
        const WitnessFamily& fam = b.family(i);
        for (Elem x : fam.elems)
          for (Elem y : fam.elems) {
            const Expr &u = fam.expr_of(x), &v = fam.expr_of(y);
            bool finite = true;
            std::size_t len = 0;
            try {
              len = std::max(expand_finite(u).size(),
                             expand_finite(v).size());
            } catch (const InputError&) {
              finite = false;
            }
            if (finite && len <= 64 && k <= 4)
              CHECK(ef_equiv_finite(u, v, k));
          }
      }
    }
  }
}

TEST_CASE("the inseparable pair of the worked example") {
  ParsedFile f = load_data("sixelem.mon");
  LanguageRecognizer J = recognizer(f, "J");
  LanguageRecognizer K = recognizer(f, "K");
  for (unsigned k = 0; k <= 4; ++k) {
    CAPTURE(k);
    WitnessPair w = witness_pair(J, K, k);
    CHECK(J.accepting.contains(eval_expr(w.left, f.pres, f.letters)));
    CHECK(K.accepting.contains(eval_expr(w.right, f.pres, f.letters)));
    // Both words are a lasso followed by a finite power; the powers differ
    // by one around 2^k + 1.
    REQUIRE(w.left->kind == WordExpr::Kind::Concat);
    REQUIRE(w.right->kind == WordExpr::Kind::Concat);
    REQUIRE(w.left->right->kind == WordExpr::Kind::Pow);
    REQUIRE(w.right->right->kind == WordExpr::Kind::Pow);
    std::uint64_t lo = (std::uint64_t{1} << k) + 1;
    std::uint64_t el = w.left->right->exp, er = w.right->right->exp;
    CHECK(std::min(el, er) == lo);
    CHECK(std::max(el, er) == lo + 1);
    CHECK(check_derivation(w.deriv));
  }

  LanguageRecognizer L = recognizer(f, "L");
  CHECK_THROWS_AS(witness_pair(K, L, 2), InputError);
}

TEST_CASE("ordinal parsing and printing") {
  for (const std::string& text : {"0", "5", "w", "w*2", "w+1", "w+5",
                                  "w^2+w+1", "w^2*3+w*2+5"}) {
    CAPTURE(text);
    CnfOrdinal o = parse_ordinal(text);
    CHECK(print_ordinal(o) == text);
  }
  CHECK_THROWS_AS(parse_ordinal("1+w"), InputError);   // ascending
  CHECK_THROWS_AS(parse_ordinal("w+w"), InputError);   // repeated power
  CHECK_THROWS_AS(parse_ordinal("w*0"), InputError);
  CHECK_THROWS_AS(parse_ordinal(""), InputError);
  CHECK_THROWS_AS(parse_ordinal("x"), InputError);
}

TEST_CASE("one-letter approximants over the six-element monoid") {
  ParsedFile f = load_data("sixelem.mon");
  PowerMonoid pm = power_presentation_reachable(
      f.pres, {subset_of(f.pres, {"a"})});
  MergeMonoidView v = pm.view();
  Elem a = pm.index_of(subset_of(f.pres, {"a"}));

  auto rho = [&](const std::string& kappa) {
    return pm.carrier[approximate_one_letter(v, a, parse_ordinal(kappa))];
  };

  CHECK(rho("0") == Subset::single(f.pres.unit()));
  for (const std::string& fin : {"1", "2", "3", "4"})
    CHECK(rho(fin) == subset_of(f.pres, {"a", "aa"}));
  CHECK(rho("w") == subset_of(f.pres, {"a^w"}));
  CHECK(rho("w*2") == subset_of(f.pres, {"a^w"}));
  CHECK(rho("w+1") == subset_of(f.pres, {"a^w.a", "a^w.aa"}));
  CHECK(rho("w+5") == subset_of(f.pres, {"a^w.a", "a^w.aa"}));
  CHECK(rho("w^2+w+1") == subset_of(f.pres, {"a^w.a", "a^w.aa"}));
}

TEST_CASE("approximants bound the exact value from above") {
  for (const auto& file : corpus_files()) {
    CAPTURE(file);
    ParsedFile f = load_data(file);
    PowerMonoid pm =
        power_presentation_reachable(f.pres, letter_seeds(f.letters));
    MergeMonoidView v = pm.view();
    for (const auto& [letter, base] : f.letters.letters) {
      Elem a = pm.index_of(Subset::single(base));
      // Raw tower values, without clamping at the stabilisation level.
      std::vector<Elem> tower{a};
      for (unsigned m = 0; m < 2; ++m) tower.push_back(v.omega[tower[m]]);
      for (unsigned e2 = 0; e2 <= 4; ++e2)
        for (unsigned e1 = 0; e1 <= 4; ++e1)
          for (unsigned e0 = 0; e0 <= 4; ++e0) {
            CnfOrdinal kappa;
            if (e2) kappa.terms.emplace_back(2, e2);
            if (e1) kappa.terms.emplace_back(1, e1);
            if (e0) kappa.terms.emplace_back(0, e0);
            Elem exact = v.unit;
            exact = v.product(exact, v.power(tower[2], e2));
            exact = v.product(exact, v.power(tower[1], e1));
            exact = v.product(exact, v.power(tower[0], e0));
            Elem approx = approximate_one_letter(v, a, kappa);
            CAPTURE(print_ordinal(kappa));
            CHECK(v.below(exact, approx));
          }
    }
  }
}
