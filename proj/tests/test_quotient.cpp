#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lia/gen.hpp"
#include "lia/quotient.hpp"

using namespace lia;

TEST_CASE("entailment via the separator") {
  ImpStructure A = fixture_bool2();
  Separator S = lsep(0, A);
  CHECK(entails(A, S, A.lat.bottom, A.lat.top));
  CHECK(entails(A, S, A.lat.top, A.lat.top));
  CHECK_FALSE(entails(A, S, A.lat.top, A.lat.bottom));
}

TEST_CASE("quotient by the least separator") {
  for (const auto& A : fixture_battery()) {
    Separator S = lsep(0, A);
    QuotientAlgebra Q = build_quotient(A, S);
    CHECK(Q.classes() >= 1);
    CHECK(Q.classes() <= A.size());
    // class membership is an equivalence compatible with entailment
    for (int a = 0; a < A.size(); ++a) {
      int ca = Q.class_of[a];
      CHECK(entails(A, S, a, Q.repr[ca]));
      CHECK(entails(A, S, Q.repr[ca], a));
    }
    CHECK(quotient_welldef_check(Q).ok());
  }
}

TEST_CASE("full separator collapses everything to one class") {
  ImpStructure A = fixture_chain4();
  Separator S;
  S.kind = SepKind::Linear;
  S.carrier = A.lat.all_mask();
  QuotientAlgebra Q = build_quotient(A, S);
  CHECK(Q.classes() == 1);
  CHECK(quotient_welldef_check(Q).ok());
}

TEST_CASE("residuated lattice laws hold in the quotient") {
  for (const auto& A : fixture_battery()) {
    for (std::uint64_t X :
         {std::uint64_t{0}, std::uint64_t{1} << A.lat.top}) {
      Separator S = lsep(X, A);
      QuotientAlgebra Q = build_quotient(A, S);
      Report r = residuated_suite(Q);
      CHECK_MESSAGE(r.ok(), r.to_text());
    }
  }
}

TEST_CASE("elementary tensor matches the meet on Heyting fixtures") {
  ImpStructure A = fixture_pow3();
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b)
      CHECK(elem_tensor(A, a, b) == A.lat.meet(a, b));
}
