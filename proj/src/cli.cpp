#include "splitbound/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "splitbound/bounds.hpp"
#include "splitbound/brauer.hpp"
#include "splitbound/chowring.hpp"
#include "splitbound/error.hpp"
#include "splitbound/karpenko.hpp"
#include "splitbound/record.hpp"
#include "splitbound/valuation.hpp"
#include "splitbound/verify.hpp"

namespace splitbound::cli {

namespace {

// Usage problems detected after CLI11 has accepted the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raw option text, converted per command so every number stays exact.
struct Args {
  std::string p, k, n, r, d, top, codim, index, period;
  std::string shape, parts, points, target, fiber, method = "oracle", i;
  std::string format = "text";
  std::optional<std::string> vp;
  bool all = false;
  std::vector<std::string> suites;
};

struct Context {
  std::uint64_t karpenko_budget = karpenko::kDefaultBudget;
};

ExactInteger number(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing required option ") + flag);
  try {
    return parse_decimal(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::uint64_t small(const std::string& text, const char* flag) {
  ExactInteger value = number(text, flag);
  if (value < 0) throw DomainError(std::string(flag) + " must be nonnegative, got " + value.str());
  return to_u64(value, flag);
}

std::vector<ExactInteger> number_list(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing required option ") + flag);
  std::vector<ExactInteger> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(number(item, flag));
  if (!text.empty() && text.back() == ',') throw UsageError(std::string(flag) + ": trailing comma");
  return values;
}

std::vector<std::uint64_t> small_list(const std::string& text, const char* flag) {
  std::vector<std::uint64_t> out;
  for (const ExactInteger& v : number_list(text, flag)) {
    if (v < 0) throw DomainError(std::string(flag) + " entries must be nonnegative");
    out.push_back(to_u64(v, flag));
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

std::string dec(const ExactInteger& x) { return to_decimal(x); }
std::string boolean(bool b) { return b ? "true" : "false"; }

Prime prime_arg(const Args& a) { return Prime(number(a.p, "--p")); }

chowring::RingShape ring_shape(const std::string& text) {
  std::vector<std::uint32_t> bounds;
  for (std::uint64_t d : small_list(text, "--shape")) {
    if (d > std::numeric_limits<std::uint32_t>::max()) throw DomainError("--shape entry too large");
    bounds.push_back(static_cast<std::uint32_t>(d));
  }
  return chowring::RingShape(std::move(bounds));
}

void add_bound_report(OutputRecord& rec, const bounds::BoundReport& report) {
  rec.outputs.emplace_back("multinomial_factor", dec(report.multinomial_factor));
  rec.outputs.emplace_back("remainder_r", dec(report.remainder_r));
  rec.outputs.emplace_back("period_power", dec(report.period_power));
  if (report.p_part) rec.outputs.emplace_back("p_part", dec(*report.p_part));
  if (report.cofactor_m) rec.outputs.emplace_back("cofactor_m", dec(*report.cofactor_m));
  rec.outputs.emplace_back("total", dec(report.total));
}

// ---- commands --------------------------------------------------------------

OutputRecord cmd_vp(const Args& a, const Context&) {
  const Prime p = prime_arg(a);
  const ExactInteger n = number(a.n, "--n");
  return {"vp", {{"p", a.p}, {"n", dec(n)}}, {{"valuation", dec(valuation::vp(p, n).value())}},
          {"largest e with p^e | n"}};
}

OutputRecord cmd_vp_factorial(const Args& a, const Context&) {
  const Prime p = prime_arg(a);
  OutputRecord rec{"vp-factorial", {{"p", a.p}, {"method", a.method}}, {}, {}};
  ExactInteger argument;
  ExactInteger closed;
  if (a.method == "oracle") {
    argument = number(a.n, "--n");
    rec.inputs.emplace_back("n", dec(argument));
    rec.outputs.emplace_back("argument", dec(argument));
    rec.outputs.emplace_back("valuation", dec(valuation::vp_factorial_oracle(p, argument).value()));
    rec.provenance.push_back("Legendre sum of floor(n / p^i)");
    return rec;
  }
  const std::uint64_t n = small(a.n, "--n");
  rec.inputs.emplace_back("n", std::to_string(n));
  if (a.method == "prime-power") {
    argument = ipow(p.exact(), n);
    closed = valuation::vp_factorial_prime_power(p, n).value();
    rec.provenance.push_back("v_p((p^n)!) = (p^n - 1) / (p - 1)");
  } else if (a.method == "k-times-prime-power") {
    const ExactInteger k = number(a.k, "--k");
    rec.inputs.emplace_back("k", dec(k));
    argument = k * ipow(p.exact(), n);
    closed = valuation::vp_factorial_k_times_prime_power(p, k, n).value();
    rec.provenance.push_back("v_p((k p^n)!) = k v_p((p^n)!) for 1 <= k < p");
  } else if (a.method == "misc") {
    const std::uint64_t k = small(a.k, "--k");
    rec.inputs.emplace_back("k", std::to_string(k));
    argument = ipow(p.exact(), k) * (ipow(p.exact(), n) - 1);
    closed = valuation::vp_factorial_misc(p, k, n).value();
    rec.provenance.push_back("v_p((p^k (p^n - 1))!) = v_p((p^{k+n})!) - v_p((p^k)!) - n");
  } else {
    throw UsageError("--method must be one of oracle, prime-power, k-times-prime-power, misc");
  }
  rec.outputs.emplace_back("argument", dec(argument));
  rec.outputs.emplace_back("valuation", dec(closed));
  if (argument <= valuation::kDefaultOracleLimit) {
    const ExactInteger oracle = valuation::vp_factorial_oracle(p, argument).value();
    rec.outputs.emplace_back("oracle", dec(oracle));
    rec.outputs.emplace_back("agree", boolean(oracle == closed));
    rec.provenance.push_back("cross-checked by the Legendre sum");
    if (oracle != closed) throw ConsistencyError("closed form disagrees with the oracle");
  } else {
    rec.outputs.emplace_back("oracle", "skipped (argument above oracle limit)");
  }
  return rec;
}

OutputRecord cmd_multinomial(const Args& a, const Context&) {
  const std::uint64_t top = small(a.top, "--top");
  const std::vector<std::uint64_t> parts = a.parts.empty() ? std::vector<std::uint64_t>{}
                                                           : small_list(a.parts, "--parts");
  return {"multinomial",
          {{"top", std::to_string(top)}, {"parts", join(parts)}},
          {{"value", dec(valuation::multinomial(top, parts))}},
          {"top! / prod(parts_i!) as a product of binomials"}};
}

OutputRecord cmd_segre(const Args& a, const Context&) {
  const auto shape = ring_shape(a.shape);
  const ExactInteger expansion = chowring::segre_degree_expansion(shape);
  const ExactInteger closed = chowring::segre_degree_closed_form(shape);
  OutputRecord rec{"segre-degree",
                   {{"shape", a.shape}},
                   {{"dimension", std::to_string(shape.dimension())},
                    {"expansion", dec(expansion)},
                    {"closed_form", dec(closed)},
                    {"agree", boolean(expansion == closed)}},
                   {"point coefficient of (l_1 + ... + l_m)^dim in Z[l]/(l_i^{d_i})",
                    "multinomial(sum d_i - m; d_1 - 1, ..., d_m - 1)"}};
  if (expansion != closed) throw ConsistencyError("Segre degree routes disagree");
  return rec;
}

OutputRecord cmd_bound_general(const Args& a, const Context&) {
  const auto degrees = small_list(a.shape, "--shape");
  const bounds::AlgebraShape shape(degrees, number(a.index, "--index"), number(a.period, "--period"));
  OutputRecord rec{"bound general",
                   {{"shape", join(degrees)}, {"index", dec(shape.index())}, {"period", dec(shape.period())}},
                   {},
                   {"r = (sum d_i - m) mod I", "degree = multinomial(sum d_i - m; d_i - 1) * P^r"}};
  add_bound_report(rec, bounds::general_bound(shape));
  return rec;
}

OutputRecord cmd_bound_prime_power(const Args& a, const Context&) {
  const Prime p = prime_arg(a);
  const std::uint64_t k = small(a.k, "--k");
  const std::uint64_t n = small(a.n, "--n");
  OutputRecord rec{"bound prime-power",
                   {{"p", a.p}, {"k", std::to_string(k)}, {"n", std::to_string(n)}},
                   {},
                   {"p_part = p^{n (p^k - 1)}",
                    "m = (p^k (p^n - 1))! / ((p^n - 1)!)^{p^k} / p^{n (p^k - 1)}",
                    "checked: gcd(m, p) = 1 and v_p(total) = n (p^k - 1)"}};
  add_bound_report(rec, bounds::prime_power_bound(p, k, n));
  return rec;
}

OutputRecord cmd_bound_baseline(const Args& a, const Context&) {
  if (a.points.empty()) throw UsageError("missing required option --points");
  std::vector<bounds::BaselinePoint> points;
  std::stringstream stream(a.points);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--points entries look like DEGREE:RESIDUE_DEGREE");
    points.emplace_back(number(item.substr(0, colon), "--points"),
                        small(item.substr(colon + 1), "--points"));
  }
  return {"bound baseline",
          {{"points", a.points}},
          {{"total", dec(bounds::baseline_bound(points))}},
          {"prod over points of deg(A_p)^[F(p):F]"}};
}

OutputRecord cmd_bound_improvement(const Args& a, const Context&) {
  const Prime p = prime_arg(a);
  const std::uint64_t k = small(a.k, "--k");
  const std::uint64_t n = small(a.n, "--n");
  const auto result = bounds::bound_improvement(p, k, n);
  return {"bound improvement",
          {{"p", a.p}, {"k", std::to_string(k)}, {"n", std::to_string(n)}},
          {{"baseline", dec(result.baseline)}, {"improved_p_part", dec(result.improved_p_part)}},
          {"baseline = p^{n p^k}", "improved = p^{n (p^k - 1)} = baseline / p^n"}};
}

OutputRecord cmd_cofactor(const Args& a, const Context&) {
  const Prime p = prime_arg(a);
  const std::uint64_t k = small(a.k, "--k");
  const std::uint64_t n = small(a.n, "--n");
  return {"cofactor-m",
          {{"p", a.p}, {"k", std::to_string(k)}, {"n", std::to_string(n)}},
          {{"m", dec(bounds::cofactor_m(p, k, n))}},
          {"m = (p^k (p^n - 1))! / ((p^n - 1)!)^{p^k} / p^{n (p^k - 1)}"}};
}

OutputRecord cmd_karpenko(const Args& a, const Context& ctx) {
  const karpenko::LowerBoundQuery q(prime_arg(a), number(a.n, "--n"), number(a.codim, "--codim"));
  return {"karpenko-bound",
          {{"p", a.p}, {"n", dec(q.n)}, {"codim", dec(q.codim)}},
          {{"lower_bound", dec(karpenko::karpenko_lower_bound(q, ctx.karpenko_budget))}},
          {"min({ i + n - v_p(k - i) : 0 <= i < k } U { k })"}};
}

OutputRecord cmd_certificate(const Args& a, const Context& ctx) {
  const Prime p = prime_arg(a);
  const ExactInteger r = number(a.r, "--r");
  const auto cert = karpenko::corestriction_certificate(p, r, ctx.karpenko_budget);
  return {"corestriction-cert",
          {{"p", a.p}, {"r", dec(r)}},
          {{"n", dec(cert.n)},
           {"codim", dec(cert.codim)},
           {"observed_valuation", dec(cert.observed_valuation)},
           {"lower_bound", dec(cert.lower_bound)},
           {"violated", boolean(cert.violated)},
           {"n_below_p_squared", boolean(cert.n_below_p_squared)}},
          {"n = r p (s = 1)", "codim = p^{rp} - p^r - p - 1", "observed v_p(deg) = rp - r",
           "lower bound by direct minimization"}};
}

OutputRecord cmd_proof(const Args& a, const Context&) {
  const Prime p = prime_arg(a);
  const ExactInteger r = number(a.r, "--r");
  const auto b = karpenko::proof_inequality_breakdown(p, r);
  const auto aux = karpenko::auxiliary_inequalities(p, r);
  return {"proof-inequalities",
          {{"p", a.p}, {"r", dec(r)}},
          {{"codim_exceeds_valuation", boolean(b.codim_exceeds_valuation)},
           {"high_branch_inequality", boolean(b.high_branch_inequality)},
           {"low_branch_exact", boolean(b.low_branch_exact)},
           {"p^r>=r+2", boolean(aux.power_at_least_r_plus_2)},
           {"p^r>=rp", boolean(aux.power_at_least_rp)},
           {"holds", boolean(b.all())}},
          {"rp - r < codim", "i >= p^r + p + 1: v_p < rp and rp < r + p^r + p + 1",
           "i < rp - r: evaluated exactly"}};
}

OutputRecord cmd_aux(const Args& a, const Context&) {
  const Prime p = prime_arg(a);
  const ExactInteger r = number(a.r, "--r");
  const auto aux = karpenko::auxiliary_inequalities(p, r);
  return {"auxiliary-inequalities",
          {{"p", a.p}, {"r", dec(r)}},
          {{"p^r>=r+2", boolean(aux.power_at_least_r_plus_2)}, {"p^r>=rp", boolean(aux.power_at_least_rp)}},
          {"exact comparison"}};
}

OutputRecord cmd_index_reduction(const Args& a, const Context&) {
  const Prime p = prime_arg(a);
  const brauer::IndexReductionQuery q(brauer::BrauerVector::reduced(p, number_list(a.target, "--target")),
                                      brauer::BrauerVector::reduced(p, number_list(a.fiber, "--fiber")),
                                      small(a.d, "--d"));
  return {"index-reduction",
          {{"p", a.p}, {"target", q.target.to_string()}, {"fiber", q.generic_fiber.to_string()},
           {"d", std::to_string(q.d)}},
          {{"index_before", dec(brauer::model_index(q.target))}, {"index_after", dec(brauer::index_reduction(q))}},
          {"gcd over 1 <= i <= p^d of (p^d / gcd(p^d, i)) ind(B + i A)",
           "generic model: ind = p^(nonzero coordinates)"}};
}

OutputRecord cmd_prop1(const Args& a, const Context&) {
  const auto report = brauer::prop1_scenario(prime_arg(a));
  return {"prop1",
          {{"p", a.p}},
          {{"A", report.base.to_string()},
           {"A'", report.twisted.to_string()},
           {"index_of_A_over_F", dec(report.index_of_base)},
           {"index_of_A'_over_F", dec(report.index_of_twisted)}},
          {"F = function field of X_{p^2}(A)", "expected (p^2, p^p)"}};
}

OutputRecord cmd_prop1_table(const Args& a, const Context&) {
  const auto rows = brauer::prop1_case_table(prime_arg(a));
  OutputRecord rec{"prop1-table", {{"p", a.p}}, {}, {"term_i = (p^2 / gcd(p^2, i)) ind(A' + i A)"}};
  for (const auto& row : rows) {
    const std::string i = std::to_string(row.i);
    rec.outputs.emplace_back("term[" + i + "]", dec(row.term));
    rec.outputs.emplace_back("case[" + i + "]", brauer::case_label(row.bucket));
  }
  return rec;
}

OutputRecord cmd_prop2(const Args& a, const Context&) {
  const auto report = brauer::prop2_scenario(prime_arg(a), small(a.d, "--d"), small(a.n, "--n"));
  return {"prop2",
          {{"p", a.p}, {"d", std::to_string(report.d)}, {"n", std::to_string(report.n)}},
          {{"A", report.base.to_string()},
           {"A'", report.twisted.to_string()},
           {"index_of_A_over_F", dec(report.index_of_base)},
           {"index_of_A'_over_F", dec(report.index_of_twisted)},
           {"index_of_A'_over_X_p", dec(report.index_of_twisted_over_x_p)}},
          {"F = function field of X_{p^d}(A)", "expected (p^d, p^n)"}};
}

OutputRecord cmd_verify(const Args& a, const Context& ctx) {
  verify::Options options;
  options.karpenko_budget = ctx.karpenko_budget;
  std::vector<verify::SuiteResult> results;
  if (a.all) {
    results = verify::run_all(options);
  } else if (!a.suites.empty()) {
    for (const std::string& name : a.suites) results.push_back(verify::run_suite(name, options));
  } else {
    throw UsageError("verify needs --all or --suite NAME");
  }
  OutputRecord rec{"verify", {{"suites", a.all ? "all" : ""}}, {}, {}};
  if (!a.all) {
    std::string names;
    for (const auto& s : a.suites) names += (names.empty() ? "" : ",") + s;
    rec.inputs[0].second = names;
  }
  bool ok = true;
  for (const auto& result : results) {
    rec.outputs.emplace_back(result.name, (result.passed() ? "pass (" : "FAIL (") +
                                              std::to_string(result.checks) + " checks)");
    for (const auto& failure : result.failures) rec.provenance.push_back(result.name + ": " + failure);
    ok = ok && result.passed();
  }
  rec.outputs.emplace_back("status", ok ? "pass" : "FAIL");
  return rec;
}

// ---- --vp annotation ---------------------------------------------------------

bool is_integer_text(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  return s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                          [](char c) { return c >= '0' && c <= '9'; });
}

void annotate_valuations(OutputRecord& rec, const Prime& p) {
  Fields annotated;
  for (auto& field : rec.outputs) {
    annotated.push_back(field);
    if (!is_integer_text(field.second)) continue;
    const ExactInteger value = abs(parse_decimal(field.second));
    annotated.emplace_back("v" + std::to_string(p.value()) + "(" + field.first + ")",
                           value == 0 ? "inf" : dec(valuation::vp(p, value).value()));
  }
  rec.outputs = std::move(annotated);
}

std::uint64_t budget_from_environment() {
  const char* raw = std::getenv(kBudgetVariable);
  if (raw == nullptr || *raw == '\0') return karpenko::kDefaultBudget;
  try {
    const ExactInteger value = parse_decimal(raw);
    if (value < 1) throw DomainError("must be positive");
    return to_u64(value, kBudgetVariable);
  } catch (const DomainError& e) {
    throw UsageError(std::string(kBudgetVariable) + ": " + e.what());
  }
}

using Handler = std::function<OutputRecord(const Args&, const Context&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Exact invariants of Azumaya algebras over etale extensions", "splitbound"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", a.format, "text or json (alias: json-like-stable-schema)")
      ->check(CLI::IsMember({"text", "json", "json-like-stable-schema"}));
  app.add_option("--vp", a.vp, "also print v_P of every numeric output (defaults to --p)")
      ->expected(0, 1);

  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto sub = [&](CLI::App& parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* s = parent.add_subcommand(name, help);
    handlers.emplace_back(s, std::move(h));
    return s;
  };
  auto opt = [](CLI::App* s, const std::string& flag, std::string& target, const std::string& help) {
    s->add_option(flag, target, help);
  };

  auto* s = sub(app, "vp", "p-adic valuation of n", cmd_vp);
  opt(s, "--p", a.p, "prime");
  opt(s, "--n", a.n, "positive integer");

  s = sub(app, "vp-factorial", "v_p of a factorial, by oracle or closed form", cmd_vp_factorial);
  opt(s, "--p", a.p, "prime");
  opt(s, "--n", a.n, "n (oracle) or exponent n (closed forms)");
  opt(s, "--k", a.k, "k for k-times-prime-power and misc");
  opt(s, "--method", a.method, "oracle | prime-power | k-times-prime-power | misc");

  s = sub(app, "multinomial", "top! / prod(parts!)", cmd_multinomial);
  opt(s, "--top", a.top, "top");
  opt(s, "--parts", a.parts, "comma-separated parts");

  s = sub(app, "segre-degree", "degree of the Segre image, two ways", cmd_segre);
  opt(s, "--shape", a.shape, "comma-separated degrees d_1,...,d_m");

  CLI::App* bound = app.add_subcommand("bound", "splitting field degree bounds");
  bound->require_subcommand(1);
  s = sub(*bound, "general", "multinomial * P^r bound", cmd_bound_general);
  opt(s, "--shape", a.shape, "comma-separated component degrees");
  opt(s, "--index", a.index, "index I of the corestriction");
  opt(s, "--period", a.period, "period P of the corestriction");
  s = sub(*bound, "prime-power", "p^{n(p^k-1)} m bound", cmd_bound_prime_power);
  opt(s, "--p", a.p, "prime");
  opt(s, "--k", a.k, "k");
  opt(s, "--n", a.n, "n");
  s = sub(*bound, "baseline", "prod deg(A_p)^[F(p):F]", cmd_bound_baseline);
  opt(s, "--points", a.points, "comma-separated DEGREE:RESIDUE_DEGREE pairs");
  s = sub(*bound, "improvement", "baseline vs improved p-part", cmd_bound_improvement);
  opt(s, "--p", a.p, "prime");
  opt(s, "--k", a.k, "k");
  opt(s, "--n", a.n, "n");

  s = sub(app, "cofactor-m", "the prime-to-p cofactor m", cmd_cofactor);
  opt(s, "--p", a.p, "prime");
  opt(s, "--k", a.k, "k");
  opt(s, "--n", a.n, "n");

  s = sub(app, "karpenko-bound", "lower bound on v_p(deg Z)", cmd_karpenko);
  opt(s, "--p", a.p, "prime");
  opt(s, "--n", a.n, "degree exponent n");
  opt(s, "--codim", a.codim, "codimension k");

  s = sub(app, "corestriction-cert", "loop certificate that the generic algebra is not a corestriction",
          cmd_certificate);
  opt(s, "--p", a.p, "odd prime");
  opt(s, "--r", a.r, "r with deg B = p^r");

  s = sub(app, "proof-inequalities", "loop-free check of the certificate inequalities", cmd_proof);
  opt(s, "--p", a.p, "odd prime");
  opt(s, "--r", a.r, "r");

  s = sub(app, "auxiliary-inequalities", "p^r >= r + 2 and p^r >= rp", cmd_aux);
  opt(s, "--p", a.p, "prime");
  opt(s, "--r", a.r, "r");

  s = sub(app, "index-reduction", "index over the function field of X_{p^d}(A)", cmd_index_reduction);
  opt(s, "--p", a.p, "prime");
  opt(s, "--target", a.target, "comma-separated exponents of B");
  opt(s, "--fiber", a.fiber, "comma-separated exponents of A");
  opt(s, "--d", a.d, "d");

  s = sub(app, "prop1", "indices of A and A' over X_{p^2}(A)", cmd_prop1);
  opt(s, "--p", a.p, "prime >= 3");
  s = sub(app, "prop1-table", "per-i gcd terms and their cases", cmd_prop1_table);
  opt(s, "--p", a.p, "prime >= 3");
  s = sub(app, "prop2", "indices of A and A' over X_{p^d}(A)", cmd_prop2);
  opt(s, "--p", a.p, "prime");
  opt(s, "--d", a.d, "d");
  opt(s, "--n", a.n, "n with d < n < p");

  s = sub(app, "verify", "run the self-check suites", cmd_verify);
  s->add_flag("--all", a.all, "run every suite");
  s->add_option("--suite", a.suites, "run one named suite (repeatable)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  const Handler* handler = nullptr;
  for (const auto& [command, h] : handlers) {
    if (command->parsed()) handler = &h;
  }
  if (handler == nullptr) {
    err << "error: missing subcommand\n\n" << app.help();
    return kUsageError;
  }

  try {
    Context ctx;
    ctx.karpenko_budget = budget_from_environment();
    OutputRecord rec = (*handler)(a, ctx);
    if (a.vp) {
      const std::string& base = a.vp->empty() ? a.p : *a.vp;
      if (base.empty()) throw UsageError("--vp needs a prime: pass --vp P or use a command with --p");
      annotate_valuations(rec, Prime(number(base, "--vp")));
    }
    out << (a.format == "text" ? render_text(rec) : render_structured(rec));
    if (rec.command == "verify") {
      return rec.outputs.back().second == "pass" ? kSuccess : kConsistencyError;
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kConsistencyError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace splitbound::cli
