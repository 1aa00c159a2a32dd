#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lia/gen.hpp"
#include "lia/implicative.hpp"
#include "lia/parse.hpp"

using namespace lia;

TEST_CASE("fixture structures satisfy the axioms") {
  for (const auto& A : fixture_battery()) {
    Report r = verify_implicative(A);
    CHECK_MESSAGE(r.ok(), r.to_text());
  }
}

TEST_CASE("application is adjoint to the arrow") {
  ImpStructure A = fixture_m2();
  int n = A.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool lhs = A.lat.leq(A.app(a, b), c);
        bool rhs = A.lat.leq(a, A.arrow(b, c));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("round-trip between arrow and application presentations") {
  for (const auto& A : fixture_battery()) {
    CHECK(roundtrip_check(A).ok());
    CHECK(roundtrip_check_app(app_of_imp(A)).ok());
  }
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    ImpStructure A = random_lattice_structure(rng, 7);
    CHECK(roundtrip_check(A).ok());
  }
}

TEST_CASE("interpretation of closed linear terms") {
  ImpStructure A = fixture_bool2();
  int top = A.lat.top;
  InterpOptions opt;
  CHECK(interpret(parse_term("\\x.x"), {}, A, opt) == top);
  CHECK(interpret(parse_term("\\x.\\y.y x"), {}, A, opt) == top);
  // environment lookup
  Env env{{"a", A.lat.bottom}};
  CHECK(interpret(parse_term("a"), env, A, opt) == A.lat.bottom);
}

TEST_CASE("interpretation respects beta equality on fixtures") {
  ImpStructure A = fixture_chain4();
  InterpOptions opt;
  Term t = parse_term("(\\x.\\y.y x) a b");
  Term n = normalize(t);
  for (int va = 0; va < A.size(); ++va)
    for (int vb = 0; vb < A.size(); ++vb) {
      Env env{{"a", va}, {"b", vb}};
      CHECK(interpret(t, env, A, opt) == interpret(n, env, A, opt));
    }
}

TEST_CASE("typing judgement") {
  ImpStructure A = fixture_bool2();
  int top = A.lat.top, bot = A.lat.bottom;
  InterpOptions opt;
  CHECK(check_typing({}, parse_term("\\x.x"), top, A, opt));
  CHECK_FALSE(check_typing({}, parse_term("\\x.x"), bot, A, opt));
  CHECK(check_typing(Env{{"a", bot}}, parse_term("a"), top, A, opt));
  CHECK(check_typing(Env{{"a", bot}}, parse_term("a"), bot, A, opt));
}

TEST_CASE("closed forms agree with interpreted definitions") {
  for (const auto& A : fixture_battery()) {
    for (const std::string& name : {"I", "B", "C", "K", "W", "S"}) {
      auto [v, exact] = combinator_value(name, A);
      CHECK(v == combinator_closed_form(name, A));
      CHECK(exact);
    }
  }
}

TEST_CASE("binder depth cap throws") {
  ImpStructure A = fixture_pow3();
  InterpOptions opt;
  opt.max_binder_depth = 1;
  CHECK_THROWS_AS(interpret(parse_term("\\x.\\y.x y"), {}, A, opt), Error);
}

TEST_CASE("kleisli construction keeps the axioms on fixtures with bang") {
  ImpStructure A = fixture_bool2();
  ImpStructure K = kleisli(A);
  CHECK(verify_implicative(K).ok());
}
