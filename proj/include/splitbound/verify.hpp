#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "splitbound/karpenko.hpp"

// Self-check suites behind `splitbound verify`. Each suite re-derives known
// values or compares a closed form against an independent route.
namespace splitbound::verify {

struct Options {
  std::uint64_t karpenko_budget = karpenko::kDefaultBudget;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(std::string_view name, const Options& options = {});

/// Runs every suite concurrently; results come back in suite_names() order.
std::vector<SuiteResult> run_all(const Options& options = {});

/// min({ i + n - v_p(k - i) } U { k }) evaluated by visiting each valuation
/// level j once: the smallest i with v_p(k - i) = j comes from the largest
/// x <= k that is an odd multiple of p^j in the p-adic sense.
std::int64_t karpenko_bound_by_valuation_levels(std::uint64_t p, std::int64_t n, std::uint64_t k);

}  // namespace splitbound::verify
