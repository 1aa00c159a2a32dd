#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lia/gen.hpp"
#include "lia/records.hpp"

using namespace lia;

namespace {
RecordPair pow3_pair(const ImpStructure& A) {
  return make_pair_tables(A.lat, A.records.at("l"), A.records.at("r"));
}
}  // namespace

TEST_CASE("the pow3 record maps verify") {
  ImpStructure A = fixture_pow3();
  REQUIRE(A.records.count("l"));
  REQUIRE(A.records.count("r"));
  CHECK_MESSAGE(verify_record(A.records.at("l"), A).ok(),
                verify_record(A.records.at("l"), A).to_text());
  CHECK(verify_record(A.records.at("r"), A).ok());
}

TEST_CASE("extraction is adjoint to the record map") {
  ImpStructure A = fixture_pow3();
  RecordPair p = pow3_pair(A);
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b) {
      bool lhs = A.lat.leq(p.ext_l[a], b);
      bool rhs = A.lat.leq(a, p.l[b]);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("the pair is compatible and satisfies De Morgan duality") {
  ImpStructure A = fixture_pow3();
  RecordPair p = pow3_pair(A);
  std::string witness;
  CHECK_MESSAGE(compatible(p, A, &witness), witness);
  Report dm = demorgan_check(p, A);
  CHECK_MESSAGE(dm.ok(), dm.to_text());
}

TEST_CASE("with projects below each component record") {
  ImpStructure A = fixture_pow3();
  RecordPair p = pow3_pair(A);
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b) {
      int w = with_elem(p, A, a, b);
      CHECK(A.lat.leq(w, p.l[a]));
      CHECK(A.lat.leq(w, p.r[b]));
      CHECK(oplus_elem(p, A, a, b) >= 0);
    }
}

TEST_CASE("additive laws with the full separator") {
  ImpStructure A = fixture_pow3();
  RecordPair p = pow3_pair(A);
  Separator Sfull;
  Sfull.kind = SepKind::Linear;
  Sfull.carrier = A.lat.all_mask();
  Report r = additive_suite(A, p, Sfull);
  CHECK_MESSAGE(r.ok(), r.to_text());
}

TEST_CASE("the consistent candidate separator is rejected") {
  // {top} satisfies the record introductions but not extraction introduction
  ImpStructure A = fixture_pow3();
  RecordPair p = pow3_pair(A);
  Separator S;
  S.kind = SepKind::Linear;
  S.carrier = std::uint64_t{1} << A.lat.top;
  Report r = verify_additive_separator(S, p, A);
  bool c2_fail = false;
  for (const auto& c : r.checks)
    if (c.id == "additive.cond2_extract_intro" && c.status == Status::Fail)
      c2_fail = true;
  CHECK(c2_fail);
}

TEST_CASE("greatest and least fixpoints") {
  ImpStructure A = fixture_pow3();
  RecordPair p = pow3_pair(A);
  for (int X = 0; X < A.size(); ++X) {
    Report rb, rw;
    int fb = fixpoint_bang(X, A, p, &rb);
    int fw = fixpoint_whynot(X, A, p, &rw);
    CHECK_MESSAGE(rb.ok(), rb.to_text());
    CHECK_MESSAGE(rw.ok(), rw.to_text());
    CHECK(fb >= 0);
    CHECK(fw >= 0);
    // the bang fixpoint deflates below X's with-1 bound; duality with whynot
    CHECK(A.lat.leq(fb, with_elem(p, A, one_elem(A), with_elem(p, A, X, elem_tensor(A, fb, fb)))));
  }
}

TEST_CASE("exponential from the fixpoint bang") {
  ImpStructure A = fixture_pow3();
  RecordPair p = pow3_pair(A);
  Separator Sfull;
  Sfull.kind = SepKind::Linear;
  Sfull.carrier = A.lat.all_mask();
  Report r = exponential_from_fixpoint_check(A, p, Sfull);
  CHECK_MESSAGE(r.ok(), r.to_text());
}

TEST_CASE("a constant-top pair collapses the fixpoint") {
  // l = r = constant top is compatible but makes !X = top for every X,
  // so a consistent separator rejects the counit D
  ImpStructure A = fixture_bool2();
  std::vector<int> ctop(A.size(), A.lat.top);
  RecordPair p = make_pair_tables(A.lat, ctop, ctop);
  for (int X = 0; X < A.size(); ++X) CHECK(fixpoint_bang(X, A, p) == A.lat.top);
  Separator S;
  S.kind = SepKind::Linear;
  S.carrier = std::uint64_t{1} << A.lat.top;
  Report r = exponential_from_fixpoint_check(A, p, S);
  bool d_fail = false;
  for (const auto& c : r.checks)
    if (c.id == "sep.generator.D" && c.status == Status::Fail) d_fail = true;
  CHECK(d_fail);
}
