#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace splitbound {

/// Arbitrary precision integer. Every count, degree and coefficient in the
/// library is carried in this type; nothing is ever rounded or wrapped.
using ExactInteger = boost::multiprecision::cpp_int;

std::string to_decimal(const ExactInteger& x);

/// Parses an optionally signed decimal literal. Throws DomainError on
/// anything else (hex, whitespace, empty).
ExactInteger parse_decimal(std::string_view text);

ExactInteger ipow(const ExactInteger& base, std::uint64_t exponent);

ExactInteger factorial(std::uint64_t n);

/// Narrowing with a range check; throws DomainError when `x` does not fit.
std::uint64_t to_u64(const ExactInteger& x, std::string_view what);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// A certified prime. Construction of a composite (or of anything beyond
/// the 64-bit primality range) throws DomainError.
class Prime {
 public:
  explicit Prime(std::uint64_t value);
  explicit Prime(const ExactInteger& value);

  std::uint64_t value() const { return value_; }
  ExactInteger exact() const { return ExactInteger(value_); }
  bool is_odd() const { return value_ != 2; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

}  // namespace splitbound
