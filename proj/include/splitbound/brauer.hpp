#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitbound/integer.hpp"

// Generic Brauer classes modeled as vectors in (Z/p)^n.
//
// Coordinate j is the exponent of the j-th generic algebra A_j of degree p.
// The model axiom: the tensor product of the A_j^{e_j} with e_j != 0 is a
// division algebra, so the index is p^(number of nonzero coordinates).
namespace splitbound::brauer {

inline constexpr std::uint64_t kDefaultGcdRangeLimit = 10'000'000;

class BrauerVector {
 public:
  /// Residues must already lie in [0, p - 1].
  BrauerVector(Prime p, std::vector<std::uint64_t> coords);
  /// Reduces arbitrary integers mod p into [0, p - 1].
  static BrauerVector reduced(Prime p, const std::vector<ExactInteger>& values);
  static BrauerVector zero(Prime p, std::size_t n);
  static BrauerVector constant(Prime p, std::size_t n, std::uint64_t value);

  const Prime& p() const { return p_; }
  const std::vector<std::uint64_t>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  std::size_t nonzero_count() const;

  std::string to_string() const;

  friend bool operator==(const BrauerVector&, const BrauerVector&) = default;

 private:
  Prime p_;
  std::vector<std::uint64_t> coords_;
};

struct IndexReductionQuery {
  IndexReductionQuery(BrauerVector target, BrauerVector generic_fiber, std::uint64_t d);

  BrauerVector target;         // class B whose index is reduced
  BrauerVector generic_fiber;  // class A; base is the function field of X_{p^d}(A)
  std::uint64_t d;
};

ExactInteger model_index(const BrauerVector& v);

/// v + i w, coordinatewise mod p. Throws DomainError on mismatched (p, n).
BrauerVector combine(const BrauerVector& v, const BrauerVector& w, const ExactInteger& i);

/// gcd over 1 <= i <= p^d of (p^d / gcd(p^d, i)) * ind(target + i fiber).
/// Throws BudgetExceeded when p^d exceeds `range_limit`.
ExactInteger index_reduction(const IndexReductionQuery& q,
                             std::uint64_t range_limit = kDefaultGcdRangeLimit);

/// A = (1, ..., 1) and A' = (1, 1, 2, 3, ..., p - 1) in (Z/p)^p over X_{p^2}(A).
struct Prop1Report {
  Prime p;
  BrauerVector base;     // A
  BrauerVector twisted;  // A'
  ExactInteger index_of_base;     // expected p^2
  ExactInteger index_of_twisted;  // expected p^p
};

/// Requires p >= 3. Throws ConsistencyError unless the pair is (p^2, p^p).
Prop1Report prop1_scenario(const Prime& p);

enum class Prop1Case {
  kMinusOne,       // p does not divide i, i = p - 1 mod p: p^2 * p^{p-2}
  kOtherUnit,      // p does not divide i otherwise: p^2 * p^{p-1}
  kMultipleOfP,    // p | i: p * p^p, or 1 * p^p when p^2 | i
};

struct Prop1Row {
  std::uint64_t i;
  Prop1Case bucket;
  ExactInteger term;      // (p^2 / gcd(p^2, i)) * ind(A' + i A)
  ExactInteger expected;  // value predicted by the bucket
};

const char* case_label(Prop1Case c);

/// One row per i in 1..p^2; throws ConsistencyError on any mismatch.
std::vector<Prop1Row> prop1_case_table(const Prime& p);

/// A = (1, ..., 1) and A' = (1, 2, ..., n) in (Z/p)^n with d < n < p.
struct Prop2Report {
  Prime p;
  std::uint64_t d;
  std::uint64_t n;
  BrauerVector base;
  BrauerVector twisted;
  ExactInteger index_of_base;                // over X_{p^d}(A), expected p^d
  ExactInteger index_of_twisted;             // over X_{p^d}(A), expected p^n
  ExactInteger index_of_twisted_over_x_p;    // over X_p(A), expected p^n
};

/// Throws DomainError unless d < n < p, ConsistencyError on a mismatch.
Prop2Report prop2_scenario(const Prime& p, std::uint64_t d, std::uint64_t n);

}  // namespace splitbound::brauer
