#include "splitbound/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/integer/common_factor.hpp>

#include "splitbound/error.hpp"

namespace splitbound::brauer {

BrauerVector::BrauerVector(Prime p, std::vector<std::uint64_t> coords)
    : p_(p), coords_(std::move(coords)) {
  for (std::uint64_t c : coords_) {
    if (c >= p_.value()) {
      throw DomainError("coordinate " + std::to_string(c) + " is not a residue mod " +
                        std::to_string(p_.value()));
    }
  }
}

BrauerVector BrauerVector::reduced(Prime p, const std::vector<ExactInteger>& values) {
  std::vector<std::uint64_t> coords;
  coords.reserve(values.size());
  const ExactInteger modulus = p.exact();
  for (const ExactInteger& v : values) {
    ExactInteger r = v % modulus;
    if (r < 0) r += modulus;
    coords.push_back(r.convert_to<std::uint64_t>());
  }
  return BrauerVector(p, std::move(coords));
}

BrauerVector BrauerVector::zero(Prime p, std::size_t n) { return constant(p, n, 0); }

BrauerVector BrauerVector::constant(Prime p, std::size_t n, std::uint64_t value) {
  return BrauerVector(p, std::vector<std::uint64_t>(n, value));
}

std::size_t BrauerVector::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(coords_.begin(), coords_.end(),
                                                [](std::uint64_t c) { return c != 0; }));
}

std::string BrauerVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < coords_.size(); ++j) out << (j ? "," : "") << coords_[j];
  out << ')';
  return out.str();
}

IndexReductionQuery::IndexReductionQuery(BrauerVector target_, BrauerVector generic_fiber_,
                                         std::uint64_t d_)
    : target(std::move(target_)), generic_fiber(std::move(generic_fiber_)), d(d_) {
  if (!(target.p() == generic_fiber.p()) || target.size() != generic_fiber.size()) {
    throw DomainError("target and fiber must share p and length");
  }
}

ExactInteger model_index(const BrauerVector& v) { return ipow(v.p().exact(), v.nonzero_count()); }

BrauerVector combine(const BrauerVector& v, const BrauerVector& w, const ExactInteger& i) {
  if (!(v.p() == w.p()) || v.size() != w.size()) {
    throw DomainError("cannot combine " + v.to_string() + " and " + w.to_string());
  }
  const std::uint64_t p = v.p().value();
  ExactInteger reduced = i % p;
  if (reduced < 0) reduced += p;
  const std::uint64_t scale = reduced.convert_to<std::uint64_t>();
  std::vector<std::uint64_t> coords(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    coords[j] = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(w.coords()[j]) * scale + v.coords()[j]) % p);
  }
  return BrauerVector(v.p(), std::move(coords));
}

ExactInteger index_reduction(const IndexReductionQuery& q, std::uint64_t range_limit) {
  const ExactInteger range = ipow(q.target.p().exact(), q.d);
  if (range > range_limit) {
    throw BudgetExceeded("gcd range p^d = " + range.str() + " exceeds limit " +
                         std::to_string(range_limit));
  }
  const std::uint64_t top = range.convert_to<std::uint64_t>();
  ExactInteger result = 0;
  for (std::uint64_t i = 1; i <= top; ++i) {
    const std::uint64_t factor = top / std::gcd(top, i);
    const ExactInteger term = factor * model_index(combine(q.target, q.generic_fiber, i));
    result = boost::integer::gcd(result, term);
  }
  return result;
}

namespace {

BrauerVector prop1_twisted(const Prime& p) {
  std::vector<std::uint64_t> coords{1};
  for (std::uint64_t e = 1; e < p.value(); ++e) coords.push_back(e);
  return BrauerVector(p, std::move(coords));
}

void require_at_least_three(const Prime& p) {
  if (p.value() < 3) throw DomainError("the construction needs p >= 3");
}

}  // namespace

Prop1Report prop1_scenario(const Prime& p) {
  require_at_least_three(p);
  const std::size_t n = p.value();
  BrauerVector base = BrauerVector::constant(p, n, 1);
  BrauerVector twisted = prop1_twisted(p);
  Prop1Report report{p, base, twisted,
                     index_reduction(IndexReductionQuery(base, base, 2)),
                     index_reduction(IndexReductionQuery(twisted, base, 2))};
  const ExactInteger pe = p.exact();
  if (report.index_of_base != pe * pe || report.index_of_twisted != ipow(pe, p.value())) {
    throw ConsistencyError("prop1 scenario produced (" + report.index_of_base.str() + ", " +
                           report.index_of_twisted.str() + ")");
  }
  return report;
}

const char* case_label(Prop1Case c) {
  switch (c) {
    case Prop1Case::kMinusOne:
      return "p^2*p^(p-2)";
    case Prop1Case::kOtherUnit:
      return "p^2*p^(p-1)";
    case Prop1Case::kMultipleOfP:
      return "p*p^p|1*p^p";
  }
  return "?";
}

std::vector<Prop1Row> prop1_case_table(const Prime& p) {
  require_at_least_three(p);
  const std::uint64_t pv = p.value();
  const ExactInteger pe = p.exact();
  const BrauerVector base = BrauerVector::constant(p, pv, 1);
  const BrauerVector twisted = prop1_twisted(p);
  const std::uint64_t top = pv * pv;

  std::vector<Prop1Row> rows;
  rows.reserve(top);
  for (std::uint64_t i = 1; i <= top; ++i) {
    Prop1Row row{i, Prop1Case::kOtherUnit, 0, 0};
    row.term = (top / std::gcd(top, i)) * model_index(combine(twisted, base, i));
    if (i % pv == 0) {
      row.bucket = Prop1Case::kMultipleOfP;
      row.expected = (i % top == 0 ? ExactInteger(1) : pe) * ipow(pe, pv);
    } else if (i % pv == pv - 1) {
      row.bucket = Prop1Case::kMinusOne;
      row.expected = pe * pe * ipow(pe, pv - 2);
    } else {
      row.expected = pe * pe * ipow(pe, pv - 1);
    }
    if (row.term != row.expected) {
      throw ConsistencyError("prop1 table mismatch at i=" + std::to_string(i) + ": got " +
                             row.term.str() + ", bucket predicts " + row.expected.str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Prop2Report prop2_scenario(const Prime& p, std::uint64_t d, std::uint64_t n) {
  if (!(1 <= d && d < n && n < p.value())) {
    throw DomainError("prop2 needs 1 <= d < n < p, got d=" + std::to_string(d) +
                      " n=" + std::to_string(n) + " p=" + std::to_string(p.value()));
  }
  BrauerVector base = BrauerVector::constant(p, n, 1);
  std::vector<std::uint64_t> exps(n);
  std::iota(exps.begin(), exps.end(), 1);
  BrauerVector twisted(p, std::move(exps));

  Prop2Report report{p, d, n, base, twisted,
                     index_reduction(IndexReductionQuery(base, base, d)),
                     index_reduction(IndexReductionQuery(twisted, base, d)),
                     index_reduction(IndexReductionQuery(twisted, base, 1))};
  const ExactInteger pe = p.exact();
  if (report.index_of_base != ipow(pe, d) || report.index_of_twisted != ipow(pe, n) ||
      report.index_of_twisted_over_x_p != ipow(pe, n)) {
    throw ConsistencyError("prop2 scenario produced (" + report.index_of_base.str() + ", " +
                           report.index_of_twisted.str() + ", " +
                           report.index_of_twisted_over_x_p.str() + ")");
  }
  return report;
}

}  // namespace splitbound::brauer
