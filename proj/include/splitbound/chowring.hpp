#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "splitbound/integer.hpp"

// Arithmetic in CH(P^{d_1 - 1} x ... x P^{d_m - 1}) = Z[l_1..l_m] / (l_i^{d_i}),
// enough of it to read off the degree of the Segre image.
namespace splitbound::chowring {

/// Truncation bounds (d_1, ..., d_m): l_i^{d_i} = 0. Requires m >= 1, d_i >= 1.
class RingShape {
 public:
  explicit RingShape(std::vector<std::uint32_t> bounds);

  std::span<const std::uint32_t> bounds() const { return bounds_; }
  std::size_t rank() const { return bounds_.size(); }
  /// sum(d_i - 1), the dimension of the product of projective spaces.
  std::uint64_t dimension() const;

  friend bool operator==(const RingShape&, const RingShape&) = default;

 private:
  std::vector<std::uint32_t> bounds_;
};

using Exponents = std::vector<std::uint32_t>;

/// Sparse class keyed by exponent vector. Terms iterate in descending
/// lexicographic order of exponents; that order is also the serialization
/// order. Stored terms always satisfy e_i < d_i and have nonzero coefficients.
class ChowClass {
 public:
  using Terms = std::map<Exponents, ExactInteger, std::greater<>>;

  static ChowClass zero(const RingShape& shape);
  static ChowClass unit(const RingShape& shape);
  static ChowClass generator(const RingShape& shape, std::size_t index);
  /// coefficient * monomial; vanishes when the monomial is truncated away.
  static ChowClass monomial(const RingShape& shape, Exponents exponents, ExactInteger coefficient);

  const RingShape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ExactInteger coefficient(const Exponents& exponents) const;

  ChowClass operator+(const ChowClass& other) const;

  /// Canonical text "c·l1^e1*l2^e2 + ..."; the zero class prints as "0".
  std::string to_string() const;

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

 private:
  ChowClass(RingShape shape, Terms terms);
  void add_term(const Exponents& exponents, const ExactInteger& coefficient);

  RingShape shape_;
  Terms terms_;

  friend ChowClass multiply(const ChowClass& a, const ChowClass& b);
};

ChowClass hyperplane_sum(const RingShape& shape);

/// Throws DomainError on shape mismatch.
ChowClass multiply(const ChowClass& a, const ChowClass& b);

ChowClass power(const ChowClass& a, std::uint64_t exponent);

/// Coefficient of the point class prod l_i^{d_i - 1}.
ExactInteger point_degree(const ChowClass& a);

/// Degree of the Segre image by expanding (sum l_i)^dim in the ring.
ExactInteger segre_degree_expansion(const RingShape& shape);

/// Same degree as a multinomial coefficient.
ExactInteger segre_degree_closed_form(const RingShape& shape);

}  // namespace splitbound::chowring
