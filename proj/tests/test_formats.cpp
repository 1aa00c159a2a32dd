#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lia/formats.hpp"
#include "lia/sequent.hpp"

using namespace lia;

namespace {
const std::string kFixtures = std::string(LIA_SOURCE_DIR) + "/fixtures";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("lattice fixture files load and round-trip") {
  for (const char* name : {"bool2.lat", "chain4.lat", "m2.lat", "pow3.lat",
                           "broken.lat"}) {
    ImpStructure A = load_lattice_file(kFixtures + "/" + name);
    std::string printed = print_lattice_file(A);
    std::istringstream in(printed);
    ImpStructure B = parse_lattice_file(in);
    CHECK(print_lattice_file(B) == printed);
    CHECK(A.lat.names == B.lat.names);
    CHECK(A.imp == B.imp);
    CHECK(A.bang == B.bang);
    CHECK(A.records == B.records);
  }
}

TEST_CASE("good lattice fixtures verify; the broken one does not") {
  for (const char* name : {"bool2.lat", "chain4.lat", "m2.lat", "pow3.lat"}) {
    ImpStructure A = load_lattice_file(kFixtures + "/" + name);
    CHECK_MESSAGE(verify_lattice(A.lat).ok(), name);
    CHECK_MESSAGE(verify_implicative(A).ok(), name);
  }
  ImpStructure broken = load_lattice_file(kFixtures + "/broken.lat");
  CHECK_FALSE(verify_lattice(broken.lat).ok());
}

TEST_CASE("situation fixture files load and round-trip") {
  for (const char* name :
       {"z2.sit", "trivial.sit", "broken-m.sit", "nonassoc.sit"}) {
    Situation S = load_situation_file(kFixtures + "/" + name);
    std::string printed = print_situation_file(S);
    std::istringstream in(printed);
    Situation T = parse_situation_file(in);
    CHECK(print_situation_file(T) == printed);
  }
}

TEST_CASE("situation fixtures verify or fail as designed") {
  CHECK(verify_situation(load_situation_file(kFixtures + "/z2.sit")).ok());
  CHECK(verify_situation(load_situation_file(kFixtures + "/trivial.sit")).ok());
  Report bm = verify_situation(load_situation_file(kFixtures + "/broken-m.sit"));
  CHECK_FALSE(bm.ok());
  Report na = verify_situation(load_situation_file(kFixtures + "/nonassoc.sit"));
  CHECK_FALSE(na.ok());
}

TEST_CASE("format errors carry line information") {
  std::istringstream bad("elements: a b\nleq: a b\n");
  CHECK_THROWS_AS(parse_lattice_file(bad), ParseError);
  std::istringstream nothing("");
  CHECK_THROWS_AS(parse_lattice_file(nothing), ParseError);
  std::istringstream badsit("theta: Z/2\n");
  CHECK_THROWS_AS(parse_situation_file(badsit), ParseError);
}

TEST_CASE("every proof fixture parses, checks, and round-trips") {
  namespace fs = std::filesystem;
  std::vector<fs::path> proofs;
  for (const auto& e : fs::directory_iterator(kFixtures + "/proofs"))
    if (e.path().extension() == ".proof") proofs.push_back(e.path());
  CHECK(proofs.size() >= 50);
  for (const auto& path : proofs) {
    Proof p = parse_proof(slurp(path.string()));
    ProofCheck c = check_proof(p);
    std::string msg = path.filename().string() + " at " + c.path + ": " + c.message;
    CHECK_MESSAGE(c.ok, msg);
    Proof back = parse_proof(proof_to_string(p));
    CHECK(proof_to_string(back) == proof_to_string(p));
  }
}
