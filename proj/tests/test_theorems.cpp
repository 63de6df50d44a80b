#include "doctest.h"

#include "derham/theorems.hpp"

#include <algorithm>

using namespace derham;

namespace {

const Check* find_check(const VerificationReport& r, const std::string& name) {
  for (const Check& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

void require_pass(const VerificationReport& r) {
  for (const Check& c : r.checks) {
    CAPTURE(r.statement);
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  CHECK(r.passed);
  CHECK_FALSE(r.witness);
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("statement ids") {
  CHECK(statement_ids() == std::vector<std::string>{"annihilation", "cartier", "couple_morphism", "frobenius_iso",
                                                    "page_identification", "filtration", "example_deg4"});
  CHECK(canonical_statement("euler") == "annihilation");
  CHECK(canonical_statement("cartier") == "cartier");
  CHECK_FALSE(canonical_statement("nope"));
  CHECK(primes_up_to(13) == std::vector<Prime>{2, 3, 5, 7, 11, 13});
  CHECK(primes_up_to(1).empty());
}

TEST_CASE("individual statements pass at small points") {
  require_pass(verify_annihilation(2, 6));
  require_pass(verify_cartier(2, 3, 2));
  require_pass(verify_couple_morphism(2, 3, 2));
  require_pass(verify_frobenius_iso(2, 4, 3));
  require_pass(verify_page_identification(2, 8, 2));
  require_pass(verify_filtration(2, 6));
  require_pass(verify_example_deg4(3));
  CHECK(verify_annihilation(2, 6).parameter("n") == 6);
  CHECK(verify_cartier(2, 3, 2).parameter("p") == 2);
  CHECK(verify_annihilation(2, 6).parameter("p", 99) == 99);
}

TEST_CASE("page identification covers every page") {
  const VerificationReport r = verify_page_identification(1, 4, 2);
  for (const char* k : {"E_1: ", "E_2: ", "E_3: "}) {
    const bool seen = std::any_of(r.checks.begin(), r.checks.end(),
                                  [&](const Check& c) { return c.name.rfind(k, 0) == 0; });
    CHECK(seen);
  }
  CHECK(find_check(r, "E_3: vanishes beyond the p-adic valuation"));
}

TEST_CASE("filtration counts fail literally at r = 2, n = 8") {
  // H^1 = Z/2^2 + Z/4 + Z/8^2: graded dims 5, 3, 2, while the mod-2 cocycles
  // of Omega^1 in degrees 4, 2, 1 have dims 6, 3, 2.
  const VerificationReport r = verify_filtration(2, 8);
  CHECK_FALSE(r.passed);
  const Check* graded = find_check(r, "graded pieces match cocycle dimensions");
  REQUIRE(graded);
  CHECK_FALSE(graded->passed);
  REQUIRE(r.witness);
  CHECK(r.witness->description == "p = 2, k = 1: graded dim 5, cocycle dim 6");
  CHECK(r.witness->check == "graded pieces match cocycle dimensions");
  CHECK(r.witness->degree == 1);

  const Check* rebuilt = find_check(r, "H^i rebuilt from the cocycle dimensions");
  REQUIRE(rebuilt);
  CHECK_FALSE(rebuilt->passed);
  for (const char* name : {"graded pieces vanish outside the range",
                           "Z/p^k summand counts match boundary ranks in Omega_(n/p^k) (x) F_p",
                           "H^i rebuilt from the boundary ranks"}) {
    const Check* c = find_check(r, name);
    REQUIRE(c);
    CHECK(c->passed);
  }
}

TEST_CASE("boundary-rank description holds across the sweep") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 12; ++n) {
      const VerificationReport rep = verify_filtration(r, n);
      CAPTURE(r);
      CAPTURE(n);
      CHECK(find_check(rep, "Z/p^k summand counts match boundary ranks in Omega_(n/p^k) (x) F_p")->passed);
      CHECK(find_check(rep, "H^i rebuilt from the boundary ranks")->passed);
      CHECK(find_check(rep, "graded pieces vanish outside the range")->passed);
    }
}

TEST_CASE("failures are data") {
  const VerificationReport r = verify_filtration(2, 0);
  CHECK_FALSE(r.passed);
  REQUIRE_FALSE(r.checks.empty());
  CHECK(r.checks.back().name == "computation");
  CHECK_NOTHROW(verify_single("cartier", 1, 2, 2));
}

TEST_CASE("literal Frobenius is recorded as a note") {
  const VerificationReport r = verify_couple_morphism(2, 2, 2);
  require_pass(r);
  CHECK(find_check(r, "F_* = p^(i-1) times the couple map on D"));
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("sweep is ordered and independent of thread count") {
  SweepOptions o;
  o.rmax = 2;
  o.nmax = 6;
  o.threads = 1;
  const auto one = sweep(o);
  o.threads = 4;
  const auto four = sweep(o);
  CHECK(one == four);
  std::size_t last = 0;
  for (const auto& rep : one) {
    const auto it = std::find(statement_ids().begin(), statement_ids().end(), rep.statement);
    REQUIRE(it != statement_ids().end());
    const auto pos = static_cast<std::size_t>(it - statement_ids().begin());
    CHECK(pos >= last);
    last = pos;
    CHECK(rep.passed);
  }

  o.statements = {"cartier"};
  o.prime = 3;
  for (const auto& rep : sweep(o)) {
    CHECK(rep.statement == "cartier");
    CHECK(rep.parameter("p") == 3);
  }
}

}  // TEST_SUITE
