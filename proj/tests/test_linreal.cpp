#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lia/linreal.hpp"

using namespace lia;

TEST_CASE("cocycle situations satisfy the hypotheses") {
  for (int n : {2, 3}) {
    Situation S = cocycle_zn(n, 2, 1);
    Report r = verify_situation(S);
    CHECK_MESSAGE(r.ok(), r.to_text());
    CHECK(jacobi_check(S).ok());
  }
  Situation K = cocycle_klein(2, 1);
  CHECK(verify_situation(K).ok());
  CHECK(jacobi_check(K).ok());
  CHECK_THROWS_AS(cocycle_klein(3, 0), Error);
}

TEST_CASE("trefoil violation is caught") {
  // asymmetric m over Z/2 with a transposition-style ex
  Situation S;
  S.theta_k = 2;
  S.prog_names = {"a", "b"};
  S.ex = {{0, 1}, {1, 0}};
  S.m = {{0, 1}, {0, 0}};
  S.pole = 1;
  Report r = verify_situation(S);
  CHECK_FALSE(r.ok());
  bool sym_fail = false;
  for (const auto& c : r.checks)
    if (c.id == "situation.m_symmetric" && c.status == Status::Fail) sym_fail = true;
  CHECK(sym_fail);
}

TEST_CASE("non-associative execution is caught") {
  Situation S;
  S.theta_k = 2;
  S.prog_names = {"a", "b"};
  S.ex = {{1, 0}, {0, 0}};  // a.a = b, everything else a
  S.m = {{0, 0}, {0, 0}};
  S.pole = 1;
  Report r = verify_situation(S);
  bool assoc_fail = false;
  for (const auto& c : r.checks)
    if (c.id == "situation.ex_associative" && c.status == Status::Fail)
      assoc_fail = true;
  CHECK(assoc_fail);
}

TEST_CASE("orthogonality and biorthogonal closure") {
  Situation S = cocycle_zn(2, 2, 1);
  auto rows = orthogonal_rows(S);
  CHECK((int)rows.size() == S.num_projects());
  // closure is a closure operator: extensive, idempotent
  std::uint64_t X = 1;  // singleton project set
  std::uint64_t cl = biorthogonal_closure(S, rows, X);
  CHECK((cl & X) == X);
  CHECK(biorthogonal_closure(S, rows, cl) == cl);
  CHECK(is_type(S, rows, cl));
}

TEST_CASE("type lattice is ordered by inclusion") {
  Situation S = cocycle_zn(2, 2, 1);
  auto rows = orthogonal_rows(S);
  auto pi = enumerate_types(S, kDefaultProjectCap);
  CHECK(!pi.empty());
  FinLattice L = type_lattice(pi);
  CHECK(verify_lattice(L).ok());
  for (std::size_t a = 0; a < pi.size(); ++a)
    for (std::size_t b = 0; b < pi.size(); ++b)
      CHECK(L.leq((int)a, (int)b) == ((pi[a] & ~pi[b]) == 0));
}

TEST_CASE("the bridge produces a verified implicative structure") {
  Situation S = cocycle_zn(2, 2, 1);
  Report out;
  Bridge br = as_implicative(S, out, kDefaultProjectCap);
  CHECK_MESSAGE(out.ok(), out.to_text());
  CHECK(verify_implicative(br.structure).ok());
  CHECK(verify_separator(br.separator, br.structure).ok());
  CHECK(is_consistent(br.separator, br.structure));
}

TEST_CASE("the bridge refuses a situation without id or tau") {
  Situation S = cocycle_zn(2, 2, 1);
  S.id = -1;
  Report out;
  CHECK_THROWS_AS(as_implicative(S, out), Error);
  CHECK_FALSE(out.ok());
}

TEST_CASE("lolli and tensor on types") {
  Situation S = cocycle_klein(2, 1);
  auto rows = orthogonal_rows(S);
  auto pi = enumerate_types(S, kDefaultProjectCap);
  for (std::size_t a = 0; a < pi.size() && a < 8; ++a)
    for (std::size_t b = 0; b < pi.size() && b < 8; ++b) {
      std::uint64_t arrow = lolli(S, pi[a], pi[b]);
      CHECK(is_type(S, rows, arrow));
      std::uint64_t tens = tensor(S, rows, pi[a], pi[b]);
      CHECK(is_type(S, rows, tens));
    }
}
