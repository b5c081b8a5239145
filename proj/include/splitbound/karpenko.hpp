#pragma once

#include <cstdint>

#include "splitbound/integer.hpp"

// Lower bound on v_p(deg Z) for cycles Z of codimension k on the
// Severi-Brauer variety of a generic division algebra of degree p^n and
// period p, and the certificate that such an algebra (odd p, n = r p < p^2)
// is not a corestriction of an algebra of degree p^r over a degree-p field.
namespace splitbound::karpenko {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct LowerBoundQuery {
  LowerBoundQuery(Prime p, ExactInteger n, ExactInteger codim);

  Prime p;
  ExactInteger n;      // algebra degree is p^n, n >= 1
  ExactInteger codim;  // k >= 1
};

/// min({ i + n - v_p(k - i) : 0 <= i < k } U { k }), by direct iteration.
/// Throws BudgetExceeded if k > budget.
ExactInteger karpenko_lower_bound(const LowerBoundQuery& q, std::uint64_t budget = kDefaultBudget);

struct CorestrictionCertificate {
  Prime p;
  ExactInteger r;                   // deg B = p^r over a degree p extension
  ExactInteger n;                   // r * p
  ExactInteger codim;               // p^{rp} - p^r - p - 1
  ExactInteger observed_valuation;  // rp - r
  ExactInteger lower_bound;
  bool violated;                    // observed_valuation < lower_bound
  bool n_below_p_squared;           // r < p, the range where s = 1 is forced
};

/// Runs the minimization loop at (p, n = r p, codim). Refuses p = 2.
CorestrictionCertificate corestriction_certificate(const Prime& p, const ExactInteger& r,
                                                   std::uint64_t budget = kDefaultBudget);

/// Pieces of the loop-free check, for display.
struct ProofBreakdown {
  bool codim_exceeds_valuation;   // rp - r < codim
  bool high_branch_inequality;    // rp < r + p^r + p + 1
  bool low_branch_exact;          // every i < min(rp - r, codim) checked directly
  bool all() const { return codim_exceeds_valuation && high_branch_inequality && low_branch_exact; }
};

/// Verifies, without running the minimization over all i, that
/// rp - r < codim and rp - r < i + rp - v_p(codim - i) for 0 <= i < codim.
///
/// Indices with i >= p^r + p + 1 follow from v_p(codim - i) < rp together
/// with rp < r + p^r + p + 1. For smaller i the bound v_p(codim - i) < r does
/// not always hold (p = 3, r = 2, i = 5 gives exactly r), so those indices are
/// split again: i >= rp - r is covered by v_p(codim - i) <= rp - 1, and the
/// at most rp - r indices below that are evaluated exactly.
ProofBreakdown proof_inequality_breakdown(const Prime& p, const ExactInteger& r);
bool proof_inequalities(const Prime& p, const ExactInteger& r);

struct AuxiliaryInequalities {
  bool power_at_least_r_plus_2;  // p^r >= r + 2
  bool power_at_least_rp;        // p^r >= r p
};

AuxiliaryInequalities auxiliary_inequalities(const Prime& p, const ExactInteger& r);

}  // namespace splitbound::karpenko
