#pragma once

#include <cstdint>
#include <span>

#include "splitbound/integer.hpp"

namespace splitbound::valuation {

/// Exponent of a prime in some quantity. Never negative.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(ExactInteger value);

  const ExactInteger& value() const { return value_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend bool operator<(const Valuation& a, const Valuation& b) { return a.value_ < b.value_; }

 private:
  ExactInteger value_ = 0;
};

/// Default input cap for vp_factorial_oracle.
inline constexpr std::uint64_t kDefaultOracleLimit = 100'000'000;

/// Largest e with p^e | n. Throws DomainError for n <= 0.
Valuation vp(const Prime& p, const ExactInteger& n);

/// v_p(n!) by summing floor(n / p^i). Independent of every closed form
/// below. Inputs above `limit` are refused with BudgetExceeded.
Valuation vp_factorial_oracle(const Prime& p, const ExactInteger& n,
                              std::uint64_t limit = kDefaultOracleLimit);

/// v_p((p^n)!) = (p^n - 1) / (p - 1).
Valuation vp_factorial_prime_power(const Prime& p, std::uint64_t n);

/// v_p((k p^n)!) = k * v_p((p^n)!), valid for 1 <= k < p only.
Valuation vp_factorial_k_times_prime_power(const Prime& p, const ExactInteger& k, std::uint64_t n);

/// v_p((p^k (p^n - 1))!) = v_p((p^{k+n})!) - v_p((p^k)!) - n.
Valuation vp_factorial_misc(const Prime& p, std::uint64_t k, std::uint64_t n);

/// top! / prod(parts_i!) via a product of binomials. Throws DomainError
/// when the parts do not sum to `top`.
ExactInteger multinomial(std::uint64_t top, std::span<const std::uint64_t> parts);

ExactInteger binomial(std::uint64_t n, std::uint64_t k);

}  // namespace splitbound::valuation
