#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lia/gen.hpp"
#include "lia/sequent.hpp"

using namespace lia;

TEST_CASE("formula parsing and printing round-trip") {
  for (const char* src : {
           "A",
           "A -o B",
           "A -o B -o C",
           "(A -o B) -o C",
           "A * B -o B * A",
           "!A -o !!A",
           "~A -o A -o bot",
           "1",
           "A @ B",
       }) {
    Formula f = parse_formula(src);
    Formula back = parse_formula(formula_to_string(f));
    CHECK(formula_equal(f, back));
  }
  // 1 and ~ are sugar
  CHECK(formula_equal(parse_formula("1"), parse_formula("bot -o bot")));
  CHECK(formula_equal(parse_formula("~A"), parse_formula("A -o bot")));
  // -o is right-associative, * binds tighter
  CHECK(formula_equal(parse_formula("A -o B -o C"), parse_formula("A -o (B -o C)")));
  CHECK(formula_equal(parse_formula("A * B -o C"), parse_formula("(A * B) -o C")));
}

TEST_CASE("a simple valid proof checks and extracts the identity") {
  Proof p = parse_proof("(-oR [] |- A -o A (ax [A] |- A))");
  ProofCheck c = check_proof(p);
  CHECK(c.ok);
  CHECK(core_requirement(p) == CoreKind::LCore);
  Term t = extract(p);
  CHECK(is_linear(t).ok);
  CHECK(alpha_beta_equal(t, parse_term("\\x.x")));
}

TEST_CASE("exchange must swap two adjacent distinct formulas") {
  // fine: one adjacent swap
  Proof good = parse_proof(
      "(ex [B, A] |- A * B"
      " (*R [A, B] |- A * B (ax [A] |- A) (ax [B] |- B)))");
  CHECK(check_proof(good).ok);
  // wrong: contexts are equal, no swap happened
  Proof noop = parse_proof("(ex [A] |- A (ax [A] |- A))");
  CHECK_FALSE(check_proof(noop).ok);
  // wrong: a two-step rotation is not a single adjacent swap
  Proof farswap = parse_proof(
      "(ex [C, A, B] |- D"
      " (ax [A, B, C] |- D))");
  CHECK_FALSE(check_proof(farswap).ok);
}

TEST_CASE("rule shape violations are rejected with a path") {
  // ax with a wrong conclusion
  ProofCheck c1 = check_proof(parse_proof("(ax [A] |- B)"));
  CHECK_FALSE(c1.ok);
  // -oR whose premise does not move the antecedent into the context
  ProofCheck c2 = check_proof(parse_proof("(-oR [] |- A -o A (ax [B] |- B))"));
  CHECK_FALSE(c2.ok);
  // *R with a context split in the wrong order
  ProofCheck c3 = check_proof(parse_proof(
      "(*R [B, A] |- A * B (ax [A] |- A) (ax [B] |- B))"));
  CHECK_FALSE(c3.ok);
  CHECK_FALSE(c3.message.empty());
}

TEST_CASE("promotion requires a fully banged context") {
  Proof bad = parse_proof("(!R [A] |- !A (ax [A] |- A))");
  CHECK_FALSE(check_proof(bad).ok);
  Proof good = parse_proof("(!R [!A] |- !A (!dL [!A] |- A (ax [A] |- A)))");
  CHECK(check_proof(good).ok);
}

TEST_CASE("core classification by rules used") {
  Proof lin = parse_proof("(-oR [] |- A -o A (ax [A] |- A))");
  CHECK(core_requirement(lin) == CoreKind::LCore);
  Proof elem = parse_proof(
      "(-oR [] |- !A -o B -o B (!wL [!A] |- B -o B (-oR [] |- B -o B (ax [B] |- B))))");
  CHECK(core_requirement(elem) == CoreKind::ElemCore);
  Proof expo = parse_proof("(-oR [] |- !A -o A (!dL [!A] |- A (ax [A] |- A)))");
  CHECK(core_requirement(expo) == CoreKind::ECore);
}

TEST_CASE("extraction yields well-scoped terms of the right discipline") {
  Proof dup = parse_proof(
      "(-oR [] |- !A -o A * A"
      " (!cL [!A] |- A * A"
      "  (*R [!A, !A] |- A * A"
      "   (!dL [!A] |- A (ax [A] |- A))"
      "   (!dL [!A] |- A (ax [A] |- A)))))");
  CHECK(check_proof(dup).ok);
  Term t = extract(dup);
  CHECK(free_variables(t).empty());
  CHECK(is_linear_bang(t).ok);
  // the plain linear judgement refuses terms with ! constructs outright
  CHECK_THROWS_AS(is_linear(t), NotPlainLambda);
}

TEST_CASE("cut checks and extracts") {
  Proof p = parse_proof(
      "(-oR [] |- A -o A"
      " (cut [A] |- A (ax [A] |- A) (ax [A] |- A)))");
  CHECK(check_proof(p).ok);
  CHECK(alpha_beta_equal(extract(p), parse_term("\\x.x")));
}

TEST_CASE("soundness over all valuations on a fixture") {
  ImpStructure A = fixture_bool2();
  Proof p = parse_proof(
      "(-oR [] |- A * B -o B * A"
      " (*L [A * B] |- B * A"
      "  (ex [A, B] |- B * A"
      "   (*R [B, A] |- B * A (ax [B] |- B) (ax [A] |- A)))))");
  InterpOptions opt;
  opt.max_binder_depth = 16;
  for (int va = 0; va < A.size(); ++va)
    for (int vb = 0; vb < A.size(); ++vb) {
      Report r = soundness_check(p, A, {{"A", va}, {"B", vb}}, opt);
      CHECK_MESSAGE(r.ok(), r.to_text());
    }
}

TEST_CASE("proof printing round-trips") {
  Proof p = parse_proof(
      "(-oR [] |- !A -o !!A (!R [!A] |- !!A (!R [!A] |- !A (!dL [!A] |- A (ax [A] |- A)))))");
  Proof back = parse_proof(proof_to_string(p));
  CHECK(check_proof(back).ok);
  CHECK(proof_to_string(p) == proof_to_string(back));
}
