#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "splitbound/error.hpp"
#include "splitbound/valuation.hpp"

using namespace splitbound;
using namespace splitbound::valuation;

TEST_CASE("vp examples") {
  CHECK(vp(Prime(3), 18).value() == 2);
  CHECK(vp(Prime(5), 7).value() == 0);
  CHECK(vp(Prime(2), 1024).value() == 10);
  CHECK(vp(Prime(7), ipow(7, 200) * 3).value() == 200);
  CHECK_THROWS_AS(vp(Prime(3), 0), DomainError);
  CHECK_THROWS_AS(vp(Prime(3), -9), DomainError);
}

TEST_CASE("Legendre oracle examples and cap") {
  CHECK(vp_factorial_oracle(Prime(3), 9).value() == 4);
  CHECK(vp_factorial_oracle(Prime(2), 0).value() == 0);
  CHECK(vp_factorial_oracle(Prime(3), 6).value() == 2);
  CHECK_THROWS_AS(vp_factorial_oracle(Prime(3), 101, 100), BudgetExceeded);
  CHECK(vp_factorial_oracle(Prime(3), 100, 100).value() == oracle::vp_factorial_by_terms(3, 100));
  CHECK_THROWS_AS(vp_factorial_oracle(Prime(3), -1), DomainError);
}

TEST_CASE("Legendre oracle agrees with per-term summation") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (std::uint64_t n = 0; n <= 3000; n += 7) {
      REQUIRE(vp_factorial_oracle(Prime(p), n).value() == oracle::vp_factorial_by_terms(p, n));
    }
  }
}

TEST_CASE("closed form examples") {
  CHECK(vp_factorial_prime_power(Prime(3), 2).value() == 4);
  CHECK(vp_factorial_prime_power(Prime(2), 0).value() == 0);
  CHECK(vp_factorial_prime_power(Prime(5), 3).value() == 31);
  CHECK(vp_factorial_oracle(Prime(5), 125).value() == 31);

  CHECK(vp_factorial_k_times_prime_power(Prime(3), 2, 2).value() == 8);
  CHECK(vp_factorial_oracle(Prime(3), 18).value() == 8);
  CHECK(vp_factorial_k_times_prime_power(Prime(5), 1, 1).value() == 1);
  CHECK(vp_factorial_k_times_prime_power(Prime(7), 6, 1).value() == 6);
  CHECK(oracle::vp_factorial_by_terms(7, 42) == 6);

  CHECK(vp_factorial_misc(Prime(3), 1, 1).value() == 2);
  CHECK(vp_factorial_misc(Prime(2), 0, 1).value() == 0);
  CHECK(vp_factorial_misc(Prime(3), 2, 1).value() == 8);
}

TEST_CASE("k outside [1, p-1] is rejected") {
  CHECK_THROWS_AS(vp_factorial_k_times_prime_power(Prime(3), 0, 2), DomainError);
  CHECK_THROWS_AS(vp_factorial_k_times_prime_power(Prime(3), 3, 2), DomainError);
  CHECK_THROWS_AS(vp_factorial_k_times_prime_power(Prime(3), -1, 2), DomainError);
}

TEST_CASE("closed forms match the oracle over the sweep ranges") {
  for (std::uint64_t pv : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const Prime p(pv);
    for (std::uint64_t n = 0; n <= 6; ++n) {
      REQUIRE(vp_factorial_prime_power(p, n).value() == vp_factorial_oracle(p, ipow(pv, n)).value());
    }
    for (std::uint64_t k = 1; k < pv; ++k) {
      for (std::uint64_t n = 0; n <= 4; ++n) {
        const ExactInteger arg = k * ipow(pv, n);
        if (arg > 1'000'000) continue;
        REQUIRE(vp_factorial_k_times_prime_power(p, k, n).value() == vp_factorial_oracle(p, arg).value());
      }
    }
  }
  for (std::uint64_t pv : {2u, 3u, 5u, 7u}) {
    const Prime p(pv);
    for (std::uint64_t k = 0; k <= 3; ++k) {
      for (std::uint64_t n = 0; n <= 3; ++n) {
        const ExactInteger arg = ipow(pv, k) * (ipow(pv, n) - 1);
        if (arg > 1'000'000) continue;
        REQUIRE(vp_factorial_misc(p, k, n).value() == vp_factorial_oracle(p, arg).value());
      }
    }
  }
}

TEST_CASE("closed forms handle exponents far beyond the oracle") {
  // (p^n - 1)/(p - 1) at n = 200 is a 200-digit repunit in base p.
  const ExactInteger big = vp_factorial_prime_power(Prime(3), 200).value();
  CHECK(big * 2 + 1 == ipow(3, 200));
}

TEST_CASE("multinomial examples") {
  const std::vector<std::uint64_t> three_twos{2, 2, 2};
  CHECK(multinomial(6, three_twos) == 90);
  const std::vector<std::uint64_t> ones{1, 1};
  CHECK(multinomial(2, ones) == 2);
  CHECK(multinomial(0, {}) == 1);
  const std::vector<std::uint64_t> bad{1, 1};
  CHECK_THROWS_AS(multinomial(3, bad), DomainError);
}

TEST_CASE("multinomial times factorials is top! (property)") {
  std::mt19937_64 rng(1);
  for (std::uint64_t top = 0; top <= 20; ++top) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint64_t> parts;
      std::uint64_t left = top;
      while (left > 0) {
        std::uint64_t part = std::uniform_int_distribution<std::uint64_t>(0, left)(rng);
        parts.push_back(part);
        left -= part;
      }
      ExactInteger value = multinomial(top, parts);
      ExactInteger product = value;
      for (auto part : parts) product *= oracle::factorial(part);
      REQUIRE(product == oracle::factorial(top));

      for (std::uint64_t p : {2u, 3u, 5u}) {
        std::int64_t expected = static_cast<std::int64_t>(oracle::vp_factorial_by_terms(p, top));
        for (auto part : parts) expected -= static_cast<std::int64_t>(oracle::vp_factorial_by_terms(p, part));
        REQUIRE(vp(Prime(p), value).value() == expected);
      }
    }
  }
}

TEST_CASE("binomial edge cases") {
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(100, 50) == ExactInteger("100891344545564193334812497256"));
}
