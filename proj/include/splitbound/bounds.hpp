#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "splitbound/integer.hpp"

// Degree bounds for etale extensions E/F splitting an Azumaya algebra A
// over an etale L/F.
namespace splitbound::bounds {

/// Component degrees (d_1..d_m) of A together with the index I and period P
/// of its corestriction. Enforces m >= 1, d_i >= 1, P | I.
class AlgebraShape {
 public:
  AlgebraShape(std::vector<std::uint64_t> degrees, ExactInteger index, ExactInteger period);

  std::span<const std::uint64_t> degrees() const { return degrees_; }
  const ExactInteger& index() const { return index_; }
  const ExactInteger& period() const { return period_; }

 private:
  std::vector<std::uint64_t> degrees_;
  ExactInteger index_;
  ExactInteger period_;
};

struct BoundReport {
  ExactInteger multinomial_factor;
  ExactInteger remainder_r;
  ExactInteger period_power;  // P^r
  ExactInteger total;
  // Set only for prime_power_bound.
  std::optional<ExactInteger> p_part;
  std::optional<ExactInteger> cofactor_m;
};

struct BaselinePoint {
  BaselinePoint(ExactInteger component_degree, std::uint64_t residue_degree);

  ExactInteger component_degree;  // deg A_p
  std::uint64_t residue_degree;   // [F(p):F]
};

struct Improvement {
  ExactInteger baseline;         // p^{n p^k}
  ExactInteger improved_p_part;  // p^{n (p^k - 1)}
};

/// r = (sum d_i - m) mod I and total = multinomial(sum d_i - m; d_i - 1) * P^r.
BoundReport general_bound(const AlgebraShape& shape);

/// (p^k (p^n - 1))! / ((p^n - 1)!)^{p^k} / p^{n (p^k - 1)}.
/// Throws ConsistencyError if the last division is inexact.
ExactInteger cofactor_m(const Prime& p, std::uint64_t k, std::uint64_t n);

/// p^{n (p^k - 1)} * m, after checking gcd(m, p) = 1 and
/// v_p(total) = n (p^k - 1). Requires n >= 1.
BoundReport prime_power_bound(const Prime& p, std::uint64_t k, std::uint64_t n);

/// prod deg(A_p)^{[F(p):F]}. Throws DomainError on an empty list.
ExactInteger baseline_bound(std::span<const BaselinePoint> points);

Improvement bound_improvement(const Prime& p, std::uint64_t k, std::uint64_t n);

}  // namespace splitbound::bounds
