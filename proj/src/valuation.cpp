#include "splitbound/valuation.hpp"

#include <string>

#include "splitbound/error.hpp"

namespace splitbound::valuation {

Valuation::Valuation(ExactInteger value) : value_(std::move(value)) {
  if (value_ < 0) throw ConsistencyError("negative valuation " + value_.str());
}

Valuation vp(const Prime& p, const ExactInteger& n) {
  if (n <= 0) throw DomainError("v_p(n) needs n >= 1, got " + n.str());
  const ExactInteger base = p.exact();
  ExactInteger rest = n;
  ExactInteger e = 0;
  ExactInteger quotient;
  ExactInteger remainder;
  for (;;) {
    boost::multiprecision::divide_qr(rest, base, quotient, remainder);
    if (remainder != 0) break;
    rest.swap(quotient);
    ++e;
  }
  return Valuation(e);
}

Valuation vp_factorial_oracle(const Prime& p, const ExactInteger& n, std::uint64_t limit) {
  if (n < 0) throw DomainError("factorial of negative " + n.str());
  if (n > limit) {
    throw BudgetExceeded("oracle input " + n.str() + " exceeds limit " + std::to_string(limit));
  }
  const ExactInteger base = p.exact();
  ExactInteger total = 0;
  ExactInteger power = base;
  while (power <= n) {
    total += n / power;
    power *= base;
  }
  return Valuation(total);
}

Valuation vp_factorial_prime_power(const Prime& p, std::uint64_t n) {
  const ExactInteger numerator = ipow(p.exact(), n) - 1;
  const ExactInteger denominator = p.exact() - 1;
  ExactInteger quotient;
  ExactInteger remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) throw ConsistencyError("(p^n - 1) not divisible by p - 1");
  return Valuation(quotient);
}

Valuation vp_factorial_k_times_prime_power(const Prime& p, const ExactInteger& k, std::uint64_t n) {
  if (k < 1 || k >= p.exact()) {
    throw DomainError("k must satisfy 1 <= k < p, got k=" + k.str() +
                      " p=" + std::to_string(p.value()));
  }
  return Valuation(k * vp_factorial_prime_power(p, n).value());
}

Valuation vp_factorial_misc(const Prime& p, std::uint64_t k, std::uint64_t n) {
  return Valuation(vp_factorial_prime_power(p, k + n).value() -
                   vp_factorial_prime_power(p, k).value() - n);
}

ExactInteger binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  ExactInteger result = 1;
  // Each prefix product is itself a binomial, so every division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

ExactInteger multinomial(std::uint64_t top, std::span<const std::uint64_t> parts) {
  ExactInteger sum = 0;
  for (std::uint64_t part : parts) sum += part;
  if (sum != top) {
    throw DomainError("multinomial parts sum to " + sum.str() + ", expected " +
                      std::to_string(top));
  }
  ExactInteger result = 1;
  std::uint64_t remaining = top;
  for (std::uint64_t part : parts) {
    result *= binomial(remaining, part);
    remaining -= part;
  }
  return result;
}

}  // namespace splitbound::valuation
