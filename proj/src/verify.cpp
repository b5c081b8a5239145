#include "splitbound/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <boost/integer/common_factor.hpp>

#include "splitbound/bounds.hpp"
#include "splitbound/brauer.hpp"
#include "splitbound/chowring.hpp"
#include "splitbound/error.hpp"
#include "splitbound/valuation.hpp"

namespace splitbound::verify {

namespace {

using valuation::vp;
using valuation::vp_factorial_oracle;

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void expect(bool condition, const std::string& what) {
    ++result_.checks;
    if (!condition && result_.failures.size() < 20) result_.failures.push_back(what);
  }

  template <class A, class B>
  void expect_eq(const A& actual, const B& expected, const std::string& what) {
    std::ostringstream msg;
    msg << what << ": got " << actual << ", expected " << expected;
    expect(actual == expected, msg.str());
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

const std::vector<std::uint64_t> kSmallPrimes{2, 3, 5, 7, 11, 13};

void paper_regressions(Checker& c, const Options&) {
  const Prime two(2), three(3);
  auto r311 = bounds::prime_power_bound(three, 1, 1);
  c.expect_eq(r311.total, 90, "prime_power_bound(3,1,1).total");
  c.expect_eq(*r311.p_part, 9, "prime_power_bound(3,1,1).p_part");
  c.expect_eq(*r311.cofactor_m, 10, "prime_power_bound(3,1,1).m");

  auto r211 = bounds::prime_power_bound(two, 1, 1);
  c.expect_eq(r211.total, 2, "prime_power_bound(2,1,1).total");
  c.expect_eq(*r211.cofactor_m, 1, "prime_power_bound(2,1,1).m");

  for (std::uint32_t m = 1; m <= 6; ++m) {
    chowring::RingShape shape({2, 2 * m});
    const std::string label = "segre degree of (2," + std::to_string(2 * m) + ")";
    c.expect_eq(chowring::segre_degree_expansion(shape), 2 * m, label + " by expansion");
    c.expect_eq(chowring::segre_degree_closed_form(shape), 2 * m, label + " closed form");
  }

  for (auto [p, k, n] : {std::tuple{2u, 1u, 1u}, std::tuple{3u, 1u, 1u}}) {
    const ExactInteger pp = ipow(p, n);
    const std::uint64_t residue = to_u64(ipow(p, k), "p^k");
    const std::vector<bounds::BaselinePoint> points{bounds::BaselinePoint(pp, residue)};
    c.expect_eq(bounds::baseline_bound(points), ipow(p, n * residue),
                "baseline_bound(p=" + std::to_string(p) + ")");
  }
}

void valuation_oracles(Checker& c, const Options&) {
  for (std::uint64_t pv : kSmallPrimes) {
    const Prime p(pv);
    for (std::uint64_t n = 0; n <= 6; ++n) {
      c.expect_eq(valuation::vp_factorial_prime_power(p, n).value(),
                  vp_factorial_oracle(p, ipow(pv, n)).value(),
                  "v_p(p^n!) p=" + std::to_string(pv) + " n=" + std::to_string(n));
    }
    for (std::uint64_t k = 1; k < pv; ++k) {
      for (std::uint64_t n = 0; n <= 4; ++n) {
        const ExactInteger arg = k * ipow(pv, n);
        if (arg > 1'000'000) continue;
        c.expect_eq(valuation::vp_factorial_k_times_prime_power(p, k, n).value(),
                    vp_factorial_oracle(p, arg).value(),
                    "v_p((k p^n)!) p=" + std::to_string(pv) + " k=" + std::to_string(k) +
                        " n=" + std::to_string(n));
      }
    }
    if (pv > 7) continue;
    for (std::uint64_t k = 0; k <= 3; ++k) {
      for (std::uint64_t n = 0; n <= 3; ++n) {
        const ExactInteger arg = ipow(pv, k) * (ipow(pv, n) - 1);
        if (arg > 1'000'000) continue;
        c.expect_eq(valuation::vp_factorial_misc(p, k, n).value(), vp_factorial_oracle(p, arg).value(),
                    "v_p((p^k(p^n-1))!) p=" + std::to_string(pv) + " k=" + std::to_string(k) +
                        " n=" + std::to_string(n));
      }
    }
  }

  // Multinomials: exact identity against factorials, and valuation additivity.
  std::mt19937_64 rng(20261015);
  for (std::uint64_t top = 0; top <= 20; ++top) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<std::uint64_t> parts;
      std::uint64_t left = top;
      while (left > 0) {
        std::uniform_int_distribution<std::uint64_t> pick(0, left);
        std::uint64_t part = pick(rng);
        parts.push_back(part);
        left -= part;
      }
      if (trial % 2 == 1) parts.push_back(0);
      ExactInteger product = valuation::multinomial(top, parts);
      ExactInteger value = product;
      for (std::uint64_t part : parts) product *= factorial(part);
      c.expect_eq(product, factorial(top), "multinomial identity top=" + std::to_string(top));

      const Prime p(kSmallPrimes[static_cast<std::size_t>(trial) % 4]);
      ExactInteger expected = vp_factorial_oracle(p, top).value();
      for (std::uint64_t part : parts) expected -= vp_factorial_oracle(p, part).value();
      c.expect_eq(vp(p, value).value(), expected,
                  "v_p(multinomial) additivity top=" + std::to_string(top));
    }
  }
}

void for_each_shape(std::size_t max_rank, std::uint32_t max_bound,
                    const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> bounds;
  std::function<void()> rec = [&] {
    if (!bounds.empty()) visit(bounds);
    if (bounds.size() == max_rank) return;
    for (std::uint32_t d = 1; d <= max_bound; ++d) {
      bounds.push_back(d);
      rec();
      bounds.pop_back();
    }
  };
  rec();
}

void segre_sweep(Checker& c, const Options&) {
  for_each_shape(4, 5, [&](const std::vector<std::uint32_t>& bounds) {
    const chowring::RingShape shape(bounds);
    std::string label = "shape (";
    for (std::size_t i = 0; i < bounds.size(); ++i) label += (i ? "," : "") + std::to_string(bounds[i]);
    label += ")";

    const ExactInteger expansion = chowring::segre_degree_expansion(shape);
    c.expect_eq(expansion, chowring::segre_degree_closed_form(shape), label + " expansion vs closed form");
    c.expect(expansion > 0, label + " point degree positive");

    const auto h = chowring::hyperplane_sum(shape);
    c.expect(chowring::power(h, shape.dimension() + 1).is_zero(), label + " vanishes above dimension");
  });
}

chowring::ChowClass random_class(const chowring::RingShape& shape, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> count(0, 4);
  auto result = chowring::ChowClass::zero(shape);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    chowring::Exponents e;
    for (std::uint32_t d : shape.bounds()) {
      std::uniform_int_distribution<std::uint32_t> pick(0, d - 1);
      e.push_back(pick(rng));
    }
    result = result + chowring::ChowClass::monomial(shape, e, coeff(rng));
  }
  return result;
}

void chow_algebra(Checker& c, const Options&) {
  std::mt19937_64 rng(77);
  const std::vector<std::vector<std::uint32_t>> shapes{{2, 2}, {3}, {3, 3}, {2, 3, 4}, {4, 1, 3}, {2, 2, 2, 2}};
  for (const auto& bounds : shapes) {
    const chowring::RingShape shape(bounds);
    const auto one = chowring::ChowClass::unit(shape);
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_class(shape, rng);
      auto b = random_class(shape, rng);
      auto d = random_class(shape, rng);
      using chowring::multiply;
      c.expect(multiply(a, b) == multiply(b, a), "commutativity");
      c.expect(multiply(multiply(a, b), d) == multiply(a, multiply(b, d)), "associativity");
      c.expect(multiply(a, one) == a, "unit is neutral");
      c.expect(multiply(a, b + d) == multiply(a, b) + multiply(a, d), "distributivity");
      c.expect(chowring::power(a, 3) == multiply(a, multiply(a, a)), "power matches repeated product");
    }
  }
}

void prime_power_valuation(Checker& c, const Options&) {
  for (std::uint64_t pv : {2u, 3u, 5u}) {
    const Prime p(pv);
    for (std::uint64_t k = 0; k <= 2; ++k) {
      for (std::uint64_t n = 1; n <= 2; ++n) {
        const std::uint64_t copies = to_u64(ipow(pv, k), "p^k");
        const ExactInteger size = copies * (ipow(pv, n) - 1);
        if (size > 10'000) continue;
        const std::string label =
            "p=" + std::to_string(pv) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
        const auto report = bounds::prime_power_bound(p, k, n);
        c.expect_eq(vp(p, report.total).value(), n * (copies - 1), label + " v_p(total)");
        c.expect_eq(boost::integer::gcd(*report.cofactor_m, p.exact()), 1, label + " gcd(m, p)");
        c.expect_eq(report.total, *report.p_part * *report.cofactor_m, label + " total = p_part * m");

        const std::vector<std::uint64_t> degrees(copies, to_u64(ipow(pv, n), "p^n"));
        const auto general = bounds::general_bound(bounds::AlgebraShape(degrees, copies, copies));
        c.expect_eq(general.remainder_r, 0, label + " general remainder");
        c.expect_eq(general.multinomial_factor, report.total, label + " general multinomial = total");
        c.expect_eq(general.total, general.multinomial_factor * general.period_power,
                    label + " general total = multinomial * P^r");
      }
    }
  }
  // Single component: multinomial is 1 and the bound is P^{d-1}.
  for (std::uint64_t d = 1; d <= 12; ++d) {
    for (std::uint64_t period = 1; period <= d; ++period) {
      if (d % period != 0) continue;
      const auto report = bounds::general_bound(bounds::AlgebraShape({d}, d, period));
      c.expect_eq(report.multinomial_factor, 1, "single component multinomial");
      c.expect_eq(report.total, ipow(period, d - 1), "single component total d=" + std::to_string(d));
    }
  }
}

void corestriction_certificates(Checker& c, const Options& options) {
  for (std::uint64_t pv : {3u, 5u, 7u}) {
    const Prime p(pv);
    for (std::uint64_t r = 1;; ++r) {
      if (ipow(pv, r * pv) > 10'000'000) break;
      const std::string label = "p=" + std::to_string(pv) + " r=" + std::to_string(r);
      const auto cert = karpenko::corestriction_certificate(p, r, options.karpenko_budget);
      const bool symbolic = karpenko::proof_inequalities(p, r);
      c.expect(cert.violated, label + " certificate violated");
      c.expect(symbolic, label + " proof inequalities");
      c.expect(cert.violated == symbolic, label + " loop agrees with symbolic check");
      c.expect_eq(cert.codim, ipow(pv, r * pv) - ipow(pv, r) - pv - 1, label + " codimension");
      c.expect_eq(cert.observed_valuation, r * pv - r, label + " observed valuation");
      c.expect_eq(cert.lower_bound,
                  karpenko_bound_by_valuation_levels(pv, static_cast<std::int64_t>(r * pv),
                                                     cert.codim.convert_to<std::uint64_t>()),
                  label + " lower bound by valuation levels");
    }
  }

  // Two iteration orders agree, and the bound never exceeds k.
  for (std::uint64_t pv : {2u, 3u, 5u, 7u}) {
    const Prime p(pv);
    for (std::uint64_t n = 1; n <= 5; ++n) {
      for (std::uint64_t k = 1; k <= 200; ++k) {
        const ExactInteger bound = karpenko::karpenko_lower_bound(karpenko::LowerBoundQuery(p, n, k));
        c.expect(bound <= k, "karpenko bound <= k");
        c.expect_eq(bound, karpenko_bound_by_valuation_levels(pv, static_cast<std::int64_t>(n), k),
                    "karpenko bound orders p=" + std::to_string(pv) + " n=" + std::to_string(n) +
                        " k=" + std::to_string(k));
      }
    }
  }
}

void counterexamples(Checker& c, const Options&) {
  for (std::uint64_t pv : {3u, 5u, 7u}) {
    const Prime p(pv);
    const auto report = brauer::prop1_scenario(p);
    c.expect_eq(report.index_of_base, pv * pv, "prop1 index of A p=" + std::to_string(pv));
    c.expect_eq(report.index_of_twisted, ipow(pv, pv), "prop1 index of A' p=" + std::to_string(pv));
  }
  for (std::uint64_t pv : {3u, 5u}) {
    const auto rows = brauer::prop1_case_table(Prime(pv));
    c.expect_eq(rows.size(), pv * pv, "prop1 table size");
    for (const auto& row : rows) c.expect(row.term == row.expected, "prop1 table row matches bucket");
  }
  for (std::uint64_t pv : {2u, 3u, 5u, 7u}) {
    for (std::uint64_t n = 2; n < pv; ++n) {
      for (std::uint64_t d = 1; d < n; ++d) {
        const auto report = brauer::prop2_scenario(Prime(pv), d, n);
        c.expect_eq(report.index_of_base, ipow(pv, d), "prop2 index of A");
        c.expect_eq(report.index_of_twisted, ipow(pv, n), "prop2 index of A'");
      }
    }
  }

  // Model invariants on random vectors.
  std::mt19937_64 rng(5);
  for (std::uint64_t pv : {2u, 3u, 5u, 7u}) {
    const Prime p(pv);
    std::uniform_int_distribution<std::uint64_t> residue(0, pv - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
      std::vector<std::uint64_t> tv(n), fv(n);
      for (auto& x : tv) x = residue(rng);
      for (auto& x : fv) x = residue(rng);
      const brauer::BrauerVector target(p, tv), fiber(p, fv);

      for (std::uint64_t i = 0; i < 2 * pv; ++i) {
        c.expect(brauer::model_index(brauer::combine(target, fiber, i)) ==
                     brauer::model_index(brauer::combine(target, fiber, i + pv)),
                 "model index periodic in i");
      }
      const std::uint64_t d = 1 + static_cast<std::uint64_t>(trial % 2);
      const ExactInteger reduced = brauer::index_reduction(brauer::IndexReductionQuery(target, fiber, d));
      c.expect(brauer::model_index(target) % reduced == 0, "reduced index divides original");
      c.expect_eq(brauer::index_reduction(
                      brauer::IndexReductionQuery(brauer::BrauerVector::zero(p, n), fiber, d)),
                  1, "zero target reduces to 1");

      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::uint64_t> tp(n), fp(n);
      for (std::size_t j = 0; j < n; ++j) {
        tp[j] = tv[perm[j]];
        fp[j] = fv[perm[j]];
      }
      const brauer::BrauerVector target_p(p, tp), fiber_p(p, fp);
      c.expect(brauer::model_index(target_p) == brauer::model_index(target), "model index permutation invariant");
      c.expect(brauer::index_reduction(brauer::IndexReductionQuery(target_p, fiber_p, d)) == reduced,
               "index reduction permutation invariant");
    }
  }
}

using SuiteFn = void (*)(Checker&, const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"paper-regressions", paper_regressions},
      {"valuation-oracles", valuation_oracles},
      {"segre-sweep", segre_sweep},
      {"chow-algebra", chow_algebra},
      {"prime-power-valuation", prime_power_valuation},
      {"corestriction-certificates", corestriction_certificates},
      {"counterexamples", counterexamples},
  };
  return suites;
}

}  // namespace

std::int64_t karpenko_bound_by_valuation_levels(std::uint64_t p, std::int64_t n, std::uint64_t k) {
  std::int64_t best = static_cast<std::int64_t>(k);
  for (std::uint64_t step = 1, level = 0; step <= k; step *= p, ++level) {
    // Largest x <= k with v_p(x) == level.
    std::uint64_t x = k / step * step;
    if ((x / step) % p == 0) x -= step;
    if (x == 0) continue;
    const std::int64_t i = static_cast<std::int64_t>(k - x);
    best = std::min(best, i + n - static_cast<std::int64_t>(level));
    if (step > k / p) break;
  }
  return best;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const Options& options) {
  for (const auto& [suite_name, fn] : registry()) {
    if (suite_name != name) continue;
    Checker checker(suite_name);
    try {
      fn(checker, options);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    return checker.take();
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_all(const Options& options) {
  std::vector<std::future<SuiteResult>> pending;
  for (const std::string& name : suite_names()) {
    pending.push_back(std::async(std::launch::async, [name, options] { return run_suite(name, options); }));
  }
  std::vector<SuiteResult> results;
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace splitbound::verify
