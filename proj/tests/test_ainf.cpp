#include <catch2/catch_amalgamated.hpp>

#include "opforge/ainf.hpp"

using namespace opforge;

TEST_CASE("homotopy-relation split bookkeeping agrees on both routes") {
  for (int n = 2; n <= 6; ++n) {
    Report rep = ainf_split_bookkeeping(n);
    const CheckResult* f = rep.first_failure();
    INFO(rep.title + (f ? ": " + f->label + " [" + f->witness + "]" : ""));
    CHECK(rep.ok());
    CHECK(rep.checks.size() == static_cast<size_t>(n));
  }
}

TEST_CASE("n=2 has no quadratic terms and n=3 has the two associativity insertions") {
  Report r2 = ainf_split_bookkeeping(2);
  REQUIRE(r2.checks.size() == 2);
  CHECK(r2.checks[0].label == "leaf i=1 (0 signed terms)");

  // At n=3 the two associativity insertions contribute: a leaf on the outer
  // operation fans out over both split labels of the inner one (3 terms),
  // while the middle leaf lands inside the graft on both sides (2 terms).
  Report r3 = ainf_split_bookkeeping(3);
  REQUIRE(r3.checks.size() == 3);
  CHECK(r3.checks[0].label == "leaf i=1 (3 signed terms)");
  CHECK(r3.checks[1].label == "leaf i=2 (2 signed terms)");
  CHECK(r3.checks[2].label == "leaf i=3 (3 signed terms)");
  for (const auto& c : r3.checks) CHECK(c.status == CheckResult::pass);
}

TEST_CASE("bookkeeping rejects out-of-range sizes") {
  CHECK_THROWS_AS(ainf_split_bookkeeping(1), std::invalid_argument);
  CHECK_THROWS_AS(ainf_split_bookkeeping(7), std::invalid_argument);
}
