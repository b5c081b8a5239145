#include "splitbound/karpenko.hpp"

#include <algorithm>

#include "splitbound/error.hpp"
#include "splitbound/valuation.hpp"

namespace splitbound::karpenko {

namespace {

std::uint64_t vp_u64(std::uint64_t p, std::uint64_t x) {
  std::uint64_t e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

ExactInteger codimension_for(const Prime& p, const ExactInteger& r) {
  const std::uint64_t rr = to_u64(r, "r");
  const ExactInteger pe = p.exact();
  return ipow(pe, rr * p.value()) - ipow(pe, rr) - pe - 1;
}

void require_odd_and_positive(const Prime& p, const ExactInteger& r) {
  if (!p.is_odd()) {
    throw DomainError(
        "p = 2 is outside the theorem: the argument needs r(p - 1) > 1 and p^r >= r + 2, "
        "both of which fail at p = 2, r = 1");
  }
  if (r < 1) throw DomainError("r must be >= 1, got " + r.str());
}

}  // namespace

LowerBoundQuery::LowerBoundQuery(Prime p_, ExactInteger n_, ExactInteger codim_)
    : p(p_), n(std::move(n_)), codim(std::move(codim_)) {
  if (n < 1) throw DomainError("degree exponent n must be >= 1, got " + n.str());
  if (codim < 1) throw DomainError("codimension must be >= 1, got " + codim.str());
}

ExactInteger karpenko_lower_bound(const LowerBoundQuery& q, std::uint64_t budget) {
  if (q.codim > budget) {
    throw BudgetExceeded("codimension " + q.codim.str() + " exceeds iteration budget " +
                         std::to_string(budget));
  }
  const std::uint64_t k = q.codim.convert_to<std::uint64_t>();
  const std::uint64_t p = q.p.value();
  // Track min(i - v_p(k - i)) natively; n is added back exactly at the end.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::int64_t term =
        static_cast<std::int64_t>(i) - static_cast<std::int64_t>(vp_u64(p, k - i));
    best = std::min(best, term);
  }
  ExactInteger result = q.codim;
  if (k > 0) result = std::min(result, ExactInteger(best) + q.n);
  return result;
}

CorestrictionCertificate corestriction_certificate(const Prime& p, const ExactInteger& r,
                                                   std::uint64_t budget) {
  require_odd_and_positive(p, r);
  const ExactInteger pe = p.exact();
  // deg A = p^n = (p^r)^{p^s} with s = 1.
  const ExactInteger n = r * pe;
  const ExactInteger codim = codimension_for(p, r);
  if (codim < 1) throw ConsistencyError("non-positive codimension " + codim.str());

  CorestrictionCertificate cert{p, r, n, codim, n - r, 0, false, r < pe};
  cert.lower_bound = karpenko_lower_bound(LowerBoundQuery(p, n, codim), budget);
  cert.violated = cert.observed_valuation < cert.lower_bound;
  return cert;
}

ProofBreakdown proof_inequality_breakdown(const Prime& p, const ExactInteger& r) {
  require_odd_and_positive(p, r);
  const ExactInteger pe = p.exact();
  const ExactInteger rp = r * pe;
  const ExactInteger observed = rp - r;
  const ExactInteger codim = codimension_for(p, r);
  const ExactInteger p_to_r = ipow(pe, to_u64(r, "r"));

  ProofBreakdown out{};
  out.codim_exceeds_valuation = observed < codim;
  out.high_branch_inequality = rp < r + p_to_r + pe + 1;

  // 0 < codim - i < p^{rp} gives v_p(codim - i) <= rp - 1 < r + i once
  // i >= rp - r, so only the indices below rp - r need evaluating.
  out.low_branch_exact = true;
  const ExactInteger stop = std::min(observed, codim);
  for (ExactInteger i = 0; i < stop; ++i) {
    if (valuation::vp(p, codim - i).value() >= r + i) {
      out.low_branch_exact = false;
      break;
    }
  }
  return out;
}

bool proof_inequalities(const Prime& p, const ExactInteger& r) {
  return proof_inequality_breakdown(p, r).all();
}

AuxiliaryInequalities auxiliary_inequalities(const Prime& p, const ExactInteger& r) {
  if (r < 0) throw DomainError("r must be nonnegative, got " + r.str());
  const ExactInteger p_to_r = ipow(p.exact(), to_u64(r, "r"));
  return {p_to_r >= r + 2, p_to_r >= r * p.exact()};
}

}  // namespace splitbound::karpenko
