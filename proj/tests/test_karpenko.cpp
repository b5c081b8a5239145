#include "doctest.h"
#include "oracles.hpp"
#include "splitbound/error.hpp"
#include "splitbound/karpenko.hpp"
#include "splitbound/verify.hpp"

using namespace splitbound;
using namespace splitbound::karpenko;

TEST_CASE("lower bound examples") {
  CHECK(karpenko_lower_bound(LowerBoundQuery(Prime(3), 3, 20)) == 3);
  CHECK(oracle::karpenko_min(3, 3, 20) == 3);
  CHECK(karpenko_lower_bound(LowerBoundQuery(Prime(2), 1, 1)) == 1);
  CHECK(karpenko_lower_bound(LowerBoundQuery(Prime(3), 2, 3)) == 1);
}

TEST_CASE("lower bound can go negative") {
  // i = 0 gives 0 + 1 - v_2(8) = -2.
  CHECK(karpenko_lower_bound(LowerBoundQuery(Prime(2), 1, 8)) == -2);
}

TEST_CASE("query validation and budget") {
  CHECK_THROWS_AS(LowerBoundQuery(Prime(3), 0, 5), DomainError);
  CHECK_THROWS_AS(LowerBoundQuery(Prime(3), 1, 0), DomainError);
  CHECK_THROWS_AS(karpenko_lower_bound(LowerBoundQuery(Prime(3), 1, 101), 100), BudgetExceeded);
  CHECK_NOTHROW(karpenko_lower_bound(LowerBoundQuery(Prime(3), 1, 100), 100));
}

TEST_CASE("loop, oracle, and valuation-level orders agree; bound <= k") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      for (std::uint64_t k = 1; k <= 400; ++k) {
        const ExactInteger loop = karpenko_lower_bound(LowerBoundQuery(Prime(p), n, k));
        REQUIRE(loop == oracle::karpenko_min(p, n, k));
        REQUIRE(loop == verify::karpenko_bound_by_valuation_levels(p, n, k));
        REQUIRE(loop <= k);
      }
    }
  }
}

TEST_CASE("huge n stays exact") {
  const ExactInteger n = ExactInteger(1) << 100;
  CHECK(karpenko_lower_bound(LowerBoundQuery(Prime(3), n, 10)) == 10);
}

TEST_CASE("corestriction certificate examples") {
  auto a = corestriction_certificate(Prime(3), 1);
  CHECK(a.codim == 20);
  CHECK(a.observed_valuation == 2);
  CHECK(a.lower_bound == 3);
  CHECK(a.violated);
  CHECK(a.n == 3);
  CHECK(a.n_below_p_squared);

  auto b = corestriction_certificate(Prime(5), 1);
  CHECK(b.codim == 3114);
  CHECK(b.observed_valuation == 4);
  CHECK(b.lower_bound == 5);
  CHECK(b.violated);

  auto c = corestriction_certificate(Prime(3), 2);
  CHECK(c.codim == 716);
  CHECK(c.observed_valuation == 4);
  CHECK(c.lower_bound == 6);
  CHECK(c.violated);
}

TEST_CASE("certificate refuses p = 2 and bad r") {
  CHECK_THROWS_AS(corestriction_certificate(Prime(2), 1), DomainError);
  CHECK_THROWS_AS(corestriction_certificate(Prime(3), 0), DomainError);
  CHECK_THROWS_AS(proof_inequalities(Prime(2), 1), DomainError);
  CHECK_THROWS_AS(corestriction_certificate(Prime(7), 2), BudgetExceeded);
}

TEST_CASE("certificate agrees with the loop-free check where the loop is feasible") {
  // p^{rp} <= 10^7 for odd p <= 7.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> cases{{3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 1}};
  for (auto [p, r] : cases) {
    CAPTURE(p);
    CAPTURE(r);
    auto cert = corestriction_certificate(Prime(p), r);
    CHECK(cert.violated);
    CHECK(cert.violated == proof_inequalities(Prime(p), r));
    CHECK(cert.n_below_p_squared == (r < p));
  }
}

TEST_CASE("loop-free check extends far past the loop budget") {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (std::uint64_t r = 1; r < p; ++r) CHECK(proof_inequalities(Prime(p), r));
  }
  CHECK(proof_inequalities(Prime(101), 100));
}

TEST_CASE("low branch needs exact evaluation: v_p(codim - i) can reach r") {
  // p = 3, r = 2: codim = 716 and 716 - 5 = 711 = 9 * 79.
  CHECK(oracle::vp(3, 716 - 5) == 2);
  auto b = proof_inequality_breakdown(Prime(3), 2);
  CHECK(b.codim_exceeds_valuation);
  CHECK(b.high_branch_inequality);
  CHECK(b.low_branch_exact);
}

TEST_CASE("auxiliary inequalities") {
  auto a = auxiliary_inequalities(Prime(3), 1);
  CHECK(a.power_at_least_r_plus_2);
  CHECK(a.power_at_least_rp);
  auto b = auxiliary_inequalities(Prime(2), 1);
  CHECK_FALSE(b.power_at_least_r_plus_2);
  auto c = auxiliary_inequalities(Prime(3), 4);
  CHECK(c.power_at_least_r_plus_2);
  CHECK(c.power_at_least_rp);
}
