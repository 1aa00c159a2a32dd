#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lia/gen.hpp"
#include "lia/lattice.hpp"

using namespace lia;

namespace {
FinLattice diamond() {
  return FinLattice::from_order({"bot", "x", "y", "top"},
                                {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}
}  // namespace

TEST_CASE("from_order computes closure, bounds, meets, joins") {
  FinLattice L = diamond();
  CHECK(L.bottom == 0);
  CHECK(L.top == 3);
  CHECK(L.leq(0, 3));  // transitivity
  CHECK_FALSE(L.leq(1, 2));
  CHECK(L.meet(1, 2) == 0);
  CHECK(L.join(1, 2) == 3);
  CHECK(L.meet(1, 3) == 1);
  CHECK(verify_lattice(L).ok());
}

TEST_CASE("mask meets and joins") {
  FinLattice L = diamond();
  CHECK(L.meet_mask(0) == L.top);     // empty meet
  CHECK(L.join_mask(0) == L.bottom);  // empty join
  CHECK(L.meet_mask(0b0110) == 0);
  CHECK(L.join_mask(0b0110) == 3);
  CHECK(L.meet_mask(L.all_mask()) == L.bottom);
}

TEST_CASE("a non-lattice order is detected, not crashed on") {
  // two incomparable points: no bounds, no binary meets or joins
  FinLattice P = FinLattice::from_order({"a", "b"}, {});
  CHECK(P.top == -1);
  CHECK(P.bottom == -1);
  CHECK(P.meet(0, 1) == -1);
  Report r = verify_lattice(P);
  CHECK_FALSE(r.ok());
}

TEST_CASE("chain lattices") {
  FinLattice C = FinLattice::from_order({"0", "1", "2"}, {{0, 1}, {1, 2}});
  CHECK(verify_lattice(C).ok());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(C.meet(a, b) == std::min(a, b));
      CHECK(C.join(a, b) == std::max(a, b));
    }
}

TEST_CASE("singleton lattice") {
  FinLattice L = FinLattice::from_order({"*"}, {});
  CHECK(L.top == 0);
  CHECK(L.bottom == 0);
  CHECK(verify_lattice(L).ok());
}

TEST_CASE("element name lookup") {
  FinLattice L = diamond();
  CHECK(L.index_of("x") == 1);
  CHECK(L.name(2) == "y");
  CHECK_THROWS_AS(L.index_of("nope"), Error);
}

TEST_CASE("random Dedekind-MacNeille completions are lattices") {
  Rng rng(3);
  for (int i = 0; i < 25; ++i) {
    ImpStructure A = random_lattice_structure(rng, 8);
    CHECK(verify_lattice(A.lat).ok());
  }
}
