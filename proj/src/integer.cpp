#include "splitbound/integer.hpp"

#include <array>

#include "splitbound/error.hpp"

namespace splitbound {

std::string to_decimal(const ExactInteger& x) { return x.str(); }

ExactInteger parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw DomainError("expected a decimal integer, got '" + std::string(text) + "'");
  }
  ExactInteger value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw DomainError("expected a decimal integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? ExactInteger(-value) : value;
}

ExactInteger ipow(const ExactInteger& base, std::uint64_t exponent) {
  ExactInteger result = 1;
  ExactInteger square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

ExactInteger factorial(std::uint64_t n) {
  ExactInteger result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

std::uint64_t to_u64(const ExactInteger& x, std::string_view what) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) {
    throw DomainError(std::string(what) + " out of 64-bit range: " + x.str());
  }
  return x.convert_to<std::uint64_t>();
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  // These twelve bases are a proven witness set below 3.3e24.
  constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime_u64(value)) {
    throw DomainError(std::to_string(value) + " is not prime");
  }
}

Prime::Prime(const ExactInteger& value) : Prime(to_u64(value, "prime")) {}

}  // namespace splitbound
