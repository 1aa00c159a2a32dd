#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lia/combinatory.hpp"
#include "lia/parse.hpp"
#include "lia/gen.hpp"

using namespace lia;

TEST_CASE("base combinators reduce to their defining terms") {
  CHECK(alpha_beta_equal(app(base_term("I"), var("a")), var("a")));
  CHECK(alpha_beta_equal(app(base_term("B"), var("f"), var("g"), var("a")),
                         app(var("f"), app(var("g"), var("a")))));
  CHECK(alpha_beta_equal(app(base_term("C"), var("f"), var("a"), var("b")),
                         app(var("f"), var("b"), var("a"))));
  CHECK(alpha_beta_equal(app(base_term("K!"), var("a"), bang(var("b"))), var("a")));
  CHECK(alpha_beta_equal(app(base_term("W!"), var("f"), bang(var("a"))),
                         app(var("f"), bang(var("a")), bang(var("a")))));
  CHECK(alpha_beta_equal(app(base_term("F"), bang(var("f")), bang(var("a"))),
                         bang(app(var("f"), var("a")))));
  CHECK(alpha_beta_equal(app(base_term("D"), bang(var("a"))), var("a")));
  CHECK(alpha_beta_equal(app(base_term("delta"), bang(var("a"))),
                         bang(bang(var("a")))));
}

TEST_CASE("linear abstraction produces {I,B,C}-words in normal form") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Term t = random_linear_term(rng, 25);
    Comb w = abstract_linear(t);
    CHECK(is_linear_comb(w));
    CHECK(alpha_equal(normalize(comb_to_term(w)), normalize(t)));
  }
}

TEST_CASE("linear abstraction rejects non-linear input") {
  CHECK_THROWS_AS(abstract_linear(parse_term("\\x.x x")), NonLinearInput);
  CHECK_THROWS_AS(abstract_linear(parse_term("\\x.\\y.x")), NonLinearInput);
}

TEST_CASE("exponential abstraction handles bang binders") {
  // The reduct of the word can differ syntactically from the input at bang
  // redexes whose argument is not a literal !, so correctness is judged by
  // the denotation in structures with a ! operation.
  Rng rng(11);
  std::vector<ImpStructure> battery{fixture_bool2(), fixture_m2()};
  InterpOptions opt;
  opt.max_binder_depth = 16;
  for (int i = 0; i < 100; ++i) {
    Term t = random_linear_bang_term(rng, 20);
    Comb w = abstract_exponential(t);
    CHECK(is_exponential_comb(w));
    if (!free_variables(t).empty()) continue;
    Term wt = comb_to_term(w);
    for (const auto& A : battery)
      CHECK(interpret(wt, {}, A, opt) == interpret(t, {}, A, opt));
  }
  CHECK_THROWS_AS(abstract_exponential(parse_term("\\x.x x")), NonLinearBangInput);
}

TEST_CASE("permutation algebra") {
  Perm id = Perm::identity();
  CHECK(id.size() == 0);
  Perm s = Perm::transposition(1, 2);
  CHECK(s.apply(1) == 2);
  CHECK(s.apply(2) == 1);
  CHECK(s.apply(3) == 3);
  CHECK(s.compose(s) == id);
  Perm c = Perm::of_images({2, 3, 1});
  CHECK(c.compose(c.inverse()) == id);
  // trailing fixed points are normalized away
  CHECK(Perm::of_images({1, 2, 3}) == id);
}

TEST_CASE("permutation words reduce to permutation terms") {
  std::vector<int> base{1, 2, 3, 4};
  std::vector<int> img = base;
  do {
    Perm s = Perm::of_images(img);
    Comb w = perm_to_comb(s);
    CHECK(is_linear_comb(w));
    CHECK(alpha_equal(normalize(comb_to_term(w)), normalize(perm_term(s))));
  } while (std::next_permutation(img.begin(), img.end()));
}

TEST_CASE("composition law for permutation words") {
  Perm s = Perm::of_images({2, 1, 3});
  Perm t = Perm::of_images({3, 1, 2});
  Comb word = capp(cbase("B"), perm_to_comb(s), perm_to_comb(t));
  // B lambda_s lambda_t --> lambda_{t o s}
  CHECK(alpha_equal(normalize(comb_to_term(word)),
                    normalize(perm_term(t.compose(s)))));
}

TEST_CASE("combinator families reduce to their closed forms") {
  CHECK(alpha_beta_equal(comb_to_term(family_I(1)), parse_term("\\x.x")));
  CHECK(alpha_beta_equal(comb_to_term(family_I(2)), parse_term("\\x.\\y.x y")));
  // B_{k,n} x y1..yn = x y1..y_{k-1} (y_k ... y_n)
  CHECK(alpha_beta_equal(comb_to_term(family_B2(2, 3)),
                         parse_term("\\x.\\y1.\\y2.\\y3.x y1 (y2 y3)")));
  CHECK(alpha_beta_equal(comb_to_term(family_B2(2, 2)),
                         parse_term("\\x.\\y1.\\y2.x y1 y2")));
  // A_{k,n} x y z1..zn = x z1..zk (y z_{k+1} ... z_n)
  CHECK(alpha_beta_equal(comb_to_term(family_A(1, 2)),
                         parse_term("\\x.\\y.\\z1.\\z2.x z1 (y z2)")));
  CHECK(alpha_beta_equal(comb_to_term(family_A(0, 2)),
                         parse_term("\\x.\\y.\\z1.\\z2.x (y z1 z2)")));
  CHECK(alpha_beta_equal(comb_to_term(family_A(2, 2)),
                         parse_term("\\x.\\y.\\z1.\\z2.x z1 z2 y")));
}

TEST_CASE("multi-variable abstraction") {
  Term t = parse_term("f b a");
  Comb w = abstract_multi(t, {"a", "b"});
  CHECK(is_linear_comb(w));  // free f is allowed in a linear word
  Term applied = app(app(comb_to_term(w), var("a")), var("b"));
  CHECK(alpha_beta_equal(applied, t));
}
