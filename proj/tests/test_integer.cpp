#include "doctest.h"
#include "oracles.hpp"
#include "splitbound/error.hpp"
#include "splitbound/integer.hpp"

using namespace splitbound;

namespace {
bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("primality agrees with trial division below 100000") {
  for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(is_prime_u64(n) == trial_division_prime(n));
}

TEST_CASE("primality on large 64-bit values") {
  CHECK(is_prime_u64(18446744073709551557ULL));      // largest 64-bit prime
  CHECK_FALSE(is_prime_u64(18446744073709551615ULL));
  CHECK_FALSE(is_prime_u64(3215031751ULL));          // strong pseudoprime to bases 2,3,5,7
  CHECK_FALSE(is_prime_u64(3825123056546413051ULL)); // strong pseudoprime to bases up to 23
  CHECK(is_prime_u64(1000000007ULL));
}

TEST_CASE("Prime rejects composites and oversize values") {
  CHECK_THROWS_AS(Prime(1), DomainError);
  CHECK_THROWS_AS(Prime(91), DomainError);
  CHECK_THROWS_AS(Prime(ExactInteger(1) << 70), DomainError);
  CHECK(Prime(97).value() == 97);
  CHECK_FALSE(Prime(2).is_odd());
}

TEST_CASE("decimal parsing and printing") {
  CHECK(parse_decimal("123456789012345678901234567890") == ExactInteger("123456789012345678901234567890"));
  CHECK(parse_decimal("-42") == -42);
  CHECK_THROWS_AS(parse_decimal(""), DomainError);
  CHECK_THROWS_AS(parse_decimal("1e5"), DomainError);
  CHECK_THROWS_AS(parse_decimal("-"), DomainError);
  CHECK(to_decimal(factorial(25)) == "15511210043330985984000000");
}

TEST_CASE("ipow and factorial") {
  CHECK(ipow(3, 0) == 1);
  CHECK(ipow(2, 100) == ExactInteger(1) << 100);
  CHECK(factorial(0) == 1);
  for (std::uint64_t n = 0; n <= 30; ++n) CHECK(factorial(n) == oracle::factorial(n));
}
