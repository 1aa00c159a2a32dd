#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lia/parse.hpp"
#include "lia/term.hpp"

using namespace lia;

TEST_CASE("parse and print round-trip") {
  for (const char* src : {
           "\\x.x",
           "\\x.\\y.x y",
           "\\!x.!x",
           "\\x.\\!y.x",
           "(\\x.x) (\\y.y)",
           "\\x.x <>",
           "\\x.<x; l = \\y.y>",
           "\\x.x.l",
           "#p",
           "\\x.x #q",
       }) {
    Term t = parse_term(src);
    Term back = parse_term(to_string(t));
    CHECK(alpha_equal(t, back));
  }
}

TEST_CASE("parse errors are reported") {
  CHECK_THROWS_AS(parse_term("\\x."), ParseError);
  CHECK_THROWS_AS(parse_term("(x"), ParseError);
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("x )"), ParseError);
}

TEST_CASE("free variables") {
  Term t = parse_term("\\x.x y (\\z.z w)");
  auto fv = free_variables(t);
  CHECK(fv == std::set<std::string>{"y", "w"});
  CHECK(free_variables(parse_term("\\x.x")).empty());
}

TEST_CASE("linearity verdicts") {
  CHECK(is_linear(parse_term("\\x.x")).ok);
  CHECK(is_linear(parse_term("\\x.\\y.y x")).ok);
  CHECK_FALSE(is_linear(parse_term("\\x.x x")).ok);       // duplicated
  CHECK_FALSE(is_linear(parse_term("\\x.\\y.x")).ok);     // y dropped
  // terms with ! constructs are outside the plain linear judgement
  CHECK_THROWS_AS(is_linear(parse_term("\\x.!x")), NotPlainLambda);
  CHECK_THROWS_AS(is_linear(parse_term("\\!x.x")), NotPlainLambda);
}

TEST_CASE("linearity with bang") {
  CHECK(is_linear_bang(parse_term("\\x.x")).ok);
  CHECK(is_linear_bang(parse_term("\\!x.x x")).ok);       // ! binder may duplicate
  CHECK(is_linear_bang(parse_term("\\!x.\\y.y")).ok);     // ! binder may drop
  CHECK(is_linear_bang(parse_term("\\!x.!x")).ok);
  CHECK_FALSE(is_linear_bang(parse_term("\\x.x x")).ok);  // plain binder must stay linear
  CHECK_FALSE(is_linear_bang(parse_term("\\x.!x")).ok);   // bang of a linear variable
}

TEST_CASE("beta reduction") {
  CHECK(alpha_beta_equal(parse_term("(\\x.x) (\\y.y)"), parse_term("\\y.y")));
  // reduction is untyped: non-linear terms still reduce
  CHECK(alpha_beta_equal(parse_term("(\\x.\\y.x) a b"), parse_term("a")));
  CHECK(alpha_equal(normalize(parse_term("(\\x.\\y.y x) a b")), parse_term("b a")));
}

TEST_CASE("bang redex") {
  CHECK(alpha_equal(normalize(parse_term("(\\!x.x x) !a")), parse_term("a a")));
  // a bang binder applied to a non-! argument is stuck
  Term stuck = parse_term("(\\!x.x) y");
  CHECK(alpha_equal(normalize(stuck), stuck));
}

TEST_CASE("record selection") {
  Term hit = parse_term("<<<>; l = a>; r = b>.l");
  CHECK(alpha_equal(normalize(hit), parse_term("a")));
  Term other = parse_term("<<<>; l = a>; r = b>.r");
  CHECK(alpha_equal(normalize(other), parse_term("b")));
  // selecting a missing label discards the extension and stays stuck on <>
  Term miss = parse_term("<<>; l = a>.r");
  CHECK(alpha_equal(normalize(miss), parse_term("<>.r")));
}

TEST_CASE("capture-avoiding substitution") {
  Term t = parse_term("\\y.x y");
  Term r = substitute(t, "x", parse_term("y"));
  // the bound y must be renamed, not captured
  CHECK(free_variables(r) == std::set<std::string>{"y"});
  CHECK(alpha_equal(r, parse_term("\\z.y z")));
}

TEST_CASE("fuel exhaustion") {
  Term omega = parse_term("(\\!x.x !x) !(\\!x.x !x)");
  CHECK_THROWS_AS(normalize(omega, 50), FuelExhausted);
}

TEST_CASE("term size and kinds") {
  Term t = parse_term("\\!x.!x");
  CHECK(contains_kind(t, {TermKind::Bang}));
  CHECK(contains_kind(t, {TermKind::BangLam}));
  CHECK_FALSE(contains_kind(parse_term("\\x.x"), {TermKind::Bang, TermKind::BangLam}));
  CHECK(term_size(parse_term("\\x.x y")) == 4);
}
