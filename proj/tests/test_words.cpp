#include <doctest.h>

#include "opfield/presets.hpp"
#include "opfield/word_poly.hpp"
#include "test_support.hpp"

using namespace opfield;
using opfield::test::random_scalar;
using opfield::test::thrown_code;

TEST_SUITE_BEGIN("word-calculus");

namespace {

TriangularSystem preset_triangular(const std::string& name) {
  OperatorSystem s = system_from_decl(preset_decl(name));
  return triangularize(s, local_decompose(s.algebra));
}

Word W(std::vector<Letter> ls) { return Word{std::move(ls)}; }

Word random_word(std::mt19937_64& rng, const TriangularSystem& t, int max_len) {
  int len = static_cast<int>(rng() % (max_len + 1));
  int n = t.slot_count() - 1;
  int tt = t.endo_count_nonid();
  Word w;
  for (int i = 0; i < len; ++i) {
    bool inv = tt > 0 && rng() % 4 == 0;
    if (inv)
      w.letters.push_back(Letter::sigma_inv(1 + static_cast<int>(rng() % tt)));
    else
      w.letters.push_back(Letter::op(1 + static_cast<int>(rng() % n)));
  }
  return w;
}

WordPoly random_word_poly(std::mt19937_64& rng, const TriangularSystem& t,
                          int max_len) {
  WordPoly s(t.field);
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i)
    s.add(random_word(rng, t, max_len), random_scalar(rng, t.field, true));
  return s;
}

// leading coefficient must be lambda * (a sigma-type word applied to g)
// whose endomorphism equals sigma of the degree word
void check_leading(const ScaleExpansion& ex, const SymExpr& lambda,
                   const std::string& g, const TriangularSystem& t) {
  REQUIRE(ex.leading_coeff.is_polynomial());
  REQUIRE(ex.leading_coeff.num().size() == lambda.num().size());
  EndoWord want = sigma_of_word(ex.leading_word, t);
  // lambda is a scalar in these tests: a single constant term
  REQUIRE(lambda.num().size() == 1);
  Scalar lam = lambda.num()[0].second;
  REQUIRE(ex.leading_coeff.num().size() == 1);
  const auto& [mono, coeff] = ex.leading_coeff.num()[0];
  CHECK(coeff == lam);
  Word gword;  // empty when sigma is the identity on g
  if (!mono.factors.empty()) {
    REQUIRE(mono.factors.size() == 1);
    CHECK(mono.factors[0].first.var == g);
    CHECK(mono.factors[0].second == 1);
    gword = mono.factors[0].first.word;
  }
  CHECK(sigma_of_word(gword, t) == want);
  for (const auto& l : gword.letters)
    if (l.kind == Letter::Kind::op) CHECK(t.is_sigma_slot(l.index));
}

}  // namespace

TEST_CASE("letter and word order") {
  CHECK(compare_words(Word{}, W({Letter::op(1)})) < 0);
  CHECK(compare_words(W({Letter::sigma_inv(1), Letter::op(2)}),
                      W({Letter::op(1), Letter::op(1)})) < 0);
  CHECK(compare_words(W({Letter::op(1), Letter::op(3)}),
                      W({Letter::op(2), Letter::op(1)})) < 0);
  CHECK(compare_letters(Letter::op(2), Letter::frobenius()) < 0);
  CHECK(compare_letters(Letter::sigma_inv(2), Letter::op(1)) < 0);
}

TEST_CASE("graded lexicographic order is total on words up to length 3") {
  std::vector<Letter> alphabet{Letter::sigma_inv(1), Letter::op(1), Letter::op(2)};
  std::vector<Word> words{Word{}};
  std::size_t begin = 0;
  for (int len = 1; len <= 3; ++len) {
    std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& l : alphabet) words.push_back(words[i].prepend(l));
    begin = end;
  }
  REQUIRE(words.size() == 40);
  for (const auto& a : words)
    for (const auto& b : words) {
      int ab = compare_words(a, b), ba = compare_words(b, a);
      CHECK(ab == -ba);                       // antisymmetry
      CHECK((ab == 0) == (a == b));           // trichotomy
    }
  for (const auto& a : words)
    for (const auto& b : words)
      for (const auto& c : words)
        if (compare_words(a, b) < 0 && compare_words(b, c) < 0)
          CHECK(compare_words(a, c) < 0);     // transitivity
}

TEST_CASE("degree and dominant coefficient") {
  Field f = Field::rationals();
  WordPoly s(f);
  s.add(W({Letter::op(1)}), Scalar::from_int(f, 3));
  s.add(Word{}, Scalar::from_int(f, 2));
  auto [w, c] = s.degree();
  CHECK(w == W({Letter::op(1)}));
  CHECK(c.equals(SymExpr::constant(Scalar::from_int(f, 3))));

  WordPoly comm(f);
  comm.add(W({Letter::op(2), Letter::op(1)}), Scalar::one(f));
  comm.add(W({Letter::op(1), Letter::op(2)}), -Scalar::one(f));
  CHECK(comm.degree().first == W({Letter::op(2), Letter::op(1)}));
  CHECK(comm.degree().second.equals(SymExpr::constant(Scalar::one(f))));

  WordPoly zero(f);
  CHECK(thrown_code([&] { zero.degree(); }) == errc::zero_combination);
  // cancelling coefficients leave no stored term
  WordPoly cancel(f);
  cancel.add(W({Letter::op(1)}), Scalar::one(f));
  cancel.add(W({Letter::op(1)}), -Scalar::one(f));
  CHECK(cancel.is_zero());
}

TEST_CASE("sigma_of_word") {
  SUBCASE("derivation letters have the identity sigma") {
    TriangularSystem t = preset_triangular("nderiv:3");
    CHECK(sigma_of_word(W({Letter::op(1)}), t).is_identity());
    CHECK(sigma_of_word(Word{}, t).is_identity());
  }
  SUBCASE("F_2 twice composes sigma twice") {
    TriangularSystem t = preset_triangular("dsigma");
    EndoWord e = sigma_of_word(W({Letter::op(2), Letter::op(2)}), t);
    CHECK(e.frob_exp == 0);
    CHECK(e.factors == std::vector<std::pair<int, int>>{{1, 2}});
  }
  SUBCASE("inverse letters cancel adjacent direct letters") {
    TriangularSystem t = preset_triangular("dsigma");
    EndoWord e = sigma_of_word(W({Letter::sigma_inv(1), Letter::op(2)}), t);
    CHECK(e.is_identity());
  }
  SUBCASE("unknown letters are rejected") {
    TriangularSystem t = preset_triangular("nderiv:2");
    CHECK(thrown_code([&] { sigma_of_word(W({Letter::sigma_inv(1)}), t); }) ==
          errc::unknown_letter);
    CHECK(thrown_code([&] { sigma_of_word(W({Letter::op(9)}), t); }) ==
          errc::unknown_letter);
  }
  SUBCASE("Frobenius letters are the identity in characteristic 0") {
    TriangularSystem t = preset_triangular("dsigma");
    EndoWord e = sigma_of_word(W({Letter::frobenius(), Letter::op(2)}), t);
    CHECK(e.frob_exp == 0);
    CHECK(e.factors == std::vector<std::pair<int, int>>{{1, 1}});
  }
  SUBCASE("Frobenius letters count in characteristic p") {
    TriangularSystem t = preset_triangular("dsigma@5");
    EndoWord e = sigma_of_word(W({Letter::frobenius(), Letter::op(2)}), t);
    CHECK(e.frob_exp == 1);
    CHECK(e.factors == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(e.to_string() == "frob.s1");
  }
  SUBCASE("compositionality on random words") {
    std::mt19937_64 rng(404);
    TriangularSystem t = preset_triangular("dsigma");
    for (int trial = 0; trial < 100; ++trial) {
      Word u = random_word(rng, t, 3), v = random_word(rng, t, 3);
      Word uv = u;
      uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
      CHECK(sigma_of_word(uv, t) ==
            sigma_of_word(u, t).compose(sigma_of_word(v, t)));
    }
  }
}

TEST_CASE("expand_scale: fixed cases") {
  Field f = Field::rationals();
  SUBCASE("Leibniz: F_1(gx) = g F_1(x) + F_1(g) x") {
    TriangularSystem t = preset_triangular("nderiv:3");
    WordPoly s(f);
    s.add(W({Letter::op(1)}), Scalar::one(f));
    ScaleExpansion ex = expand_scale(s, "g", t);
    CHECK(ex.leading_word == W({Letter::op(1)}));
    CHECK(ex.leading_coeff.equals(SymExpr::variable(f, "g")));
    REQUIRE(ex.remainder.terms().size() == 1);
    const auto& [rw, rc] = *ex.remainder.terms().begin();
    CHECK(rw == Word{});
    CHECK(rc.equals(SymExpr::generator(f, "g", W({Letter::op(1)}))));
  }
  SUBCASE("multiplicative: F_2(gx) = s(g) F_2(x)") {
    TriangularSystem t = preset_triangular("dsigma");
    WordPoly s(f);
    s.add(W({Letter::op(2)}), Scalar::one(f));
    ScaleExpansion ex = expand_scale(s, "g", t);
    CHECK(ex.leading_word == W({Letter::op(2)}));
    CHECK(ex.leading_coeff.equals(SymExpr::generator(f, "g", W({Letter::op(2)}))));
    CHECK(ex.remainder.is_zero());
  }
  SUBCASE("order-3 truncation: F_2(gx) = g F_2(x) + F_1(g) F_1(x) + F_2(g) x") {
    TriangularSystem t = preset_triangular("trunc3");
    WordPoly s(f);
    s.add(W({Letter::op(2)}), Scalar::one(f));
    ScaleExpansion ex = expand_scale(s, "g", t);
    CHECK(ex.leading_word == W({Letter::op(2)}));
    CHECK(ex.leading_coeff.equals(SymExpr::variable(f, "g")));
    REQUIRE(ex.remainder.terms().size() == 2);
    auto it = ex.remainder.terms().begin();
    CHECK(it->first == Word{});
    CHECK(it->second.equals(SymExpr::generator(f, "g", W({Letter::op(2)}))));
    ++it;
    CHECK(it->first == W({Letter::op(1)}));
    CHECK(it->second.equals(SymExpr::generator(f, "g", W({Letter::op(1)}))));
  }
  SUBCASE("zero combination is rejected") {
    TriangularSystem t = preset_triangular("dsigma");
    WordPoly zero(f);
    CHECK(thrown_code([&] { expand_scale(zero, "g", t); }) ==
          errc::zero_combination);
  }
}

TEST_CASE("expand_scale: degree drop on random combinations") {
  std::mt19937_64 rng(2718);
  for (const char* name : {"nderiv:3", "dsigma", "trunc3", "single:0,0,1"}) {
    CAPTURE(name);
    TriangularSystem t = preset_triangular(name);
    for (int trial = 0; trial < 25; ++trial) {
      WordPoly s = random_word_poly(rng, t, 3);
      Word lead = s.degree().first;
      SymExpr lambda = s.degree().second;
      ScaleExpansion ex = expand_scale(s, "g", t);
      CHECK(ex.leading_word == lead);
      check_leading(ex, lambda, "g", t);
      for (const auto& [w, c] : ex.remainder.terms())
        CHECK(compare_words(w, lead) < 0);
    }
  }
}

TEST_CASE("expand_scale: nested scaling agrees with scaling by a product") {
  std::mt19937_64 rng(515);
  for (const char* name : {"nderiv:2", "dsigma", "trunc3"}) {
    CAPTURE(name);
    TriangularSystem t = preset_triangular(name);
    RuleContext ctx(t);
    Field f = t.field;
    for (int trial = 0; trial < 10; ++trial) {
      WordPoly s = random_word_poly(rng, t, 2);
      SymExpr g1 = SymExpr::variable(f, "g1"), g2 = SymExpr::variable(f, "g2");
      SymExpr x = SymExpr::variable(f, "x");

      SymExpr direct(f);
      for (const auto& [w, c] : s.terms())
        direct += apply_word(w, g1 * g2 * x, ctx) * c;

      // stage one: expand by g1 with (g2 x) as the scaled argument
      ScaleExpansion e1 = expand_scale(s, "g1", t);
      WordPoly stage1 = e1.remainder;
      stage1.add(e1.leading_word, e1.leading_coeff);
      SymExpr nested(f);
      for (const auto& [w, c] : stage1.terms())
        nested += apply_word(w, g2 * x, ctx) * c;

      CHECK(direct.equals(nested));
    }
  }
}

TEST_SUITE_END();
