#include "splitbound/bounds.hpp"

#include <boost/integer/common_factor.hpp>

#include "splitbound/error.hpp"
#include "splitbound/valuation.hpp"

namespace splitbound::bounds {

AlgebraShape::AlgebraShape(std::vector<std::uint64_t> degrees, ExactInteger index, ExactInteger period)
    : degrees_(std::move(degrees)), index_(std::move(index)), period_(std::move(period)) {
  if (degrees_.empty()) throw DomainError("algebra needs at least one component degree");
  for (std::uint64_t d : degrees_) {
    if (d < 1) throw DomainError("component degrees must be >= 1");
  }
  if (index_ < 1) throw DomainError("index must be positive, got " + index_.str());
  if (period_ < 1) throw DomainError("period must be positive, got " + period_.str());
  if (index_ % period_ != 0) {
    throw DomainError("period " + period_.str() + " does not divide index " + index_.str());
  }
}

BaselinePoint::BaselinePoint(ExactInteger component_degree_, std::uint64_t residue_degree_)
    : component_degree(std::move(component_degree_)), residue_degree(residue_degree_) {
  if (component_degree < 1) throw DomainError("component degree must be >= 1");
  if (residue_degree < 1) throw DomainError("residue degree must be >= 1");
}

BoundReport general_bound(const AlgebraShape& shape) {
  std::vector<std::uint64_t> parts;
  std::uint64_t dimension = 0;
  for (std::uint64_t d : shape.degrees()) {
    parts.push_back(d - 1);
    dimension += d - 1;
  }
  BoundReport report;
  report.multinomial_factor = valuation::multinomial(dimension, parts);
  report.remainder_r = ExactInteger(dimension) % shape.index();
  report.period_power = ipow(shape.period(), to_u64(report.remainder_r, "remainder"));
  report.total = report.multinomial_factor * report.period_power;
  return report;
}

ExactInteger cofactor_m(const Prime& p, std::uint64_t k, std::uint64_t n) {
  const std::uint64_t copies = to_u64(ipow(p.exact(), k), "p^k");
  const std::uint64_t block = to_u64(ipow(p.exact(), n) - 1, "p^n - 1");
  const std::vector<std::uint64_t> parts(copies, block);
  // multinomial(p^k block; block, ..., block) = (p^k block)! / (block!)^{p^k}
  const ExactInteger numerator = valuation::multinomial(copies * block, parts);
  const ExactInteger divisor = ipow(p.exact(), n * (copies - 1));
  ExactInteger quotient;
  ExactInteger remainder;
  boost::multiprecision::divide_qr(numerator, divisor, quotient, remainder);
  if (remainder != 0) {
    throw ConsistencyError("cofactor m is not integral for p=" + std::to_string(p.value()) +
                           " k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  return quotient;
}

BoundReport prime_power_bound(const Prime& p, std::uint64_t k, std::uint64_t n) {
  if (n < 1) throw DomainError("prime-power bound needs n >= 1");
  const std::uint64_t copies = to_u64(ipow(p.exact(), k), "p^k");
  const std::uint64_t expected_valuation = n * (copies - 1);

  BoundReport report;
  report.cofactor_m = cofactor_m(p, k, n);
  report.p_part = ipow(p.exact(), expected_valuation);
  report.total = *report.p_part * *report.cofactor_m;
  // All p^k components have degree p^n and the corestriction has index
  // dividing p^k, so the general bound applies with exponent r = 0.
  report.multinomial_factor = report.total;
  report.remainder_r = 0;
  report.period_power = 1;

  if (boost::integer::gcd(*report.cofactor_m, p.exact()) != 1) {
    throw ConsistencyError("cofactor m = " + report.cofactor_m->str() + " is divisible by p");
  }
  if (valuation::vp(p, report.total).value() != expected_valuation) {
    throw ConsistencyError("v_p(total) differs from n (p^k - 1)");
  }
  return report;
}

ExactInteger baseline_bound(std::span<const BaselinePoint> points) {
  if (points.empty()) throw DomainError("baseline bound needs at least one point");
  ExactInteger total = 1;
  for (const BaselinePoint& point : points) total *= ipow(point.component_degree, point.residue_degree);
  return total;
}

Improvement bound_improvement(const Prime& p, std::uint64_t k, std::uint64_t n) {
  const std::uint64_t copies = to_u64(ipow(p.exact(), k), "p^k");
  Improvement result{ipow(p.exact(), n * copies), ipow(p.exact(), n * (copies - 1))};
  if (result.improved_p_part * ipow(p.exact(), n) != result.baseline) {
    throw ConsistencyError("improved p-part times p^n differs from the baseline");
  }
  return result;
}

}  // namespace splitbound::bounds
