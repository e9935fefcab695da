#include "solab/run.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

#include "solab/constructions.h"
#include "solab/numbertheory.h"
#include "solab/parallel.h"
#include "solab/wreath.h"

namespace solab {

namespace {

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_u64(std::string const &key, std::string const &v)
{
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    if (!v.empty() && v[0] == '-')
      throw std::invalid_argument(v);
    x = std::stoull(v, &used);
  } catch (std::exception const &) {
    throw UsageError("--" + key + " expects a non-negative integer, got '" + v + "'");
  }
  if (used != v.size())
    throw UsageError("--" + key + " expects a non-negative integer, got '" + v + "'");
  return x;
}

double parse_real(std::string const &key, std::string const &v)
{
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (std::exception const &) {
    throw UsageError("--" + key + " expects a number, got '" + v + "'");
  }
  if (used != v.size() || !std::isfinite(x))
    throw UsageError("--" + key + " expects a number, got '" + v + "'");
  return x;
}

// Command parameters with defaults, validated against the command table.
class Params {
public:
  Params(RunConfig const &config, CommandSpec const &spec) : config_(config), spec_(spec)
  {
    for (auto const &[k, v] : config.params) {
      if (!lookup(k))
        throw UsageError("unknown option --" + k + " for '" + spec.name +
                         "'; see solab " + spec.name + " --help");
    }
    for (auto const &p : spec.params)
      if (!p.flag && !p.optional && p.default_value.empty() && !config.params.count(p.name))
        throw UsageError("'" + spec.name + "' needs --" + p.name + " (" + p.help + ")");
  }

  bool has(std::string const &key) const { return config_.params.count(key) > 0; }

  std::string str(std::string const &key) const
  {
    auto it = config_.params.find(key);
    if (it != config_.params.end())
      return it->second;
    return lookup(key)->default_value;
  }

  std::uint64_t u64(std::string const &key) const { return parse_u64(key, str(key)); }
  double real(std::string const &key) const { return parse_real(key, str(key)); }

  bool flag(std::string const &key) const
  {
    if (!has(key))
      return false;
    auto v = str(key);
    if (v == "true" || v == "1" || v.empty())
      return true;
    if (v == "false" || v == "0")
      return false;
    throw UsageError("--" + key + " is a switch; use true or false in config files");
  }

private:
  ParamSpec const *lookup(std::string const &key) const
  {
    for (auto const &p : spec_.params)
      if (p.name == key)
        return &p;
    return nullptr;
  }

  RunConfig const &config_;
  CommandSpec const &spec_;
};

struct Context {
  RunConfig const &config;
  Params const &params;
  RunOutcome &out;

  unsigned workers() const { return config.workers; }
  std::uint64_t samples(std::uint64_t fallback) const { return config.samples.value_or(fallback); }
  std::uint64_t coset_ceiling() const
  {
    return config.exact_ceiling.value_or(preset(config.level).coset_ceiling);
  }
  std::size_t degree_ceiling() const { return preset(config.level).exhaustive_degree; }

  void fail(std::string what) { out.failures.push_back(std::move(what)); }
};

std::string b(bool v) { return v ? "true" : "false"; }

std::string num(double x)
{
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

Permutation parse_perm(std::string const &key, std::string const &text, std::size_t n)
{
  try {
    return parse_cycles(text, n);
  } catch (std::exception const &e) {
    throw UsageError("--" + key + ": " + e.what() + "; write cycles with 1-indexed points, e.g. \"(1 2)(3 4)\"");
  }
}

Parity parse_coset(std::string const &v)
{
  if (v == "even")
    return Parity::even;
  if (v == "odd")
    return Parity::odd;
  throw UsageError("--coset must be even or odd, got '" + v + "'");
}

std::size_t socle_degree(std::string const &s)
{
  std::smatch m;
  static std::regex const re(R"(alt(\d+))");
  if (!std::regex_match(s, m, re))
    throw UsageError("--s must name an alternating group such as alt5, got '" + s + "'");
  auto d = std::stoul(m[1]);
  if (d < 5 || d > 16)
    throw UsageError("--s supports alt5 .. alt16");
  return d;
}

// "5" or "5..7"
std::pair<std::size_t, std::size_t> parse_range(std::string const &key, std::string const &v)
{
  auto dots = v.find("..");
  if (dots == std::string::npos) {
    auto x = parse_u64(key, v);
    return {x, x};
  }
  auto lo = parse_u64(key, v.substr(0, dots));
  auto hi = parse_u64(key, v.substr(dots + 2));
  if (lo > hi)
    throw UsageError("--" + key + " range " + v + " is empty");
  return {lo, hi};
}

Construction construction(std::string const &key, std::string const &recipe)
{
  try {
    return make_construction(recipe);
  } catch (std::invalid_argument const &e) {
    throw UsageError("--" + key + ": " + e.what());
  }
}

Permutation element(std::string const &key, std::string const &text, Construction const &c)
{
  auto it = c.elements.find(text);
  if (it != c.elements.end())
    return it->second;
  return parse_perm(key, text, c.group.degree());
}

// ---- insolubility -------------------------------------------------------

void cmd_pins(Context &ctx)
{
  auto n = ctx.params.u64("n");
  if (n < 5 || n > 12)
    throw UsageError("--n must lie in 5..12");
  auto a = parse_perm("a", ctx.params.str("a"), n);
  auto parity = parse_coset(ctx.params.str("coset"));
  auto coset = CosetSpec::alternating(n, parity);
  bool exact = ctx.params.flag("exact") || !ctx.config.samples;

  InsolubilityReport r;
  if (exact) {
    r = pins_exact(a, coset, {ctx.coset_ceiling(), ctx.workers()});
  } else {
    SamplingOptions o;
    o.samples = *ctx.config.samples;
    o.seed = ctx.config.seed;
    o.confidence = ctx.config.confidence;
    o.workers = ctx.workers();
    r = pins_montecarlo(a, coset, o);
  }
  ctx.out.body = {{"n", n}, {"a", to_json(a)}, {"coset", ctx.params.str("coset")},
                  {"report", to_json(r)}};
  ctx.out.table.header = {"n", "a", "coset", "mode", "p_ins", "q"};
  if (exact)
    ctx.out.table.rows.push_back({std::to_string(n), to_cycle_string(a), ctx.params.str("coset"),
                                  "exact", to_fraction_string(r.p_ins),
                                  r.q_value ? to_fraction_string(*r.q_value) : ""});
  else
    ctx.out.table.rows.push_back({std::to_string(n), to_cycle_string(a), ctx.params.str("coset"),
                                  "montecarlo", num(r.p_ins_estimate.estimate),
                                  r.q_estimate ? num(r.q_estimate->estimate) : ""});
  if (a.is_identity())
    return;
  // P_ins >= Q holds pointwise, so the exact values must respect it
  if (exact && r.q_value && r.p_ins < *r.q_value)
    ctx.fail("pins: P_ins " + to_fraction_string(r.p_ins) + " below Q " +
             to_fraction_string(*r.q_value));
}

void cmd_eta(Context &ctx)
{
  auto [lo, hi] = parse_range("n", ctx.params.str("n"));
  if (lo < 5 || hi > 8)
    throw UsageError("--n must lie in 5..8 (a single value or a range like 5..7)");
  Json results = Json::array();
  ctx.out.table.header = {"n", "cycle_type", "a", "coset", "p_ins", "q"};
  for (auto n = lo; n <= hi; ++n) {
    auto r = eta_exact(n, {ctx.coset_ceiling(), ctx.workers()});
    results.push_back(to_json(r));
    for (auto const &e : r.table) {
      ctx.out.table.rows.push_back({std::to_string(n), cycle_type_string(e.cycle_type),
                                    to_cycle_string(e.a),
                                    e.coset == Parity::even ? "even" : "odd",
                                    to_fraction_string(e.p_ins), to_fraction_string(e.q_value)});
      if (e.p_ins < e.q_value)
        ctx.fail("eta n=" + std::to_string(n) + " " + cycle_type_string(e.cycle_type) +
                 ": P_ins below Q");
      if (e.q_value <= 0)
        ctx.fail("eta n=" + std::to_string(n) + " " + cycle_type_string(e.cycle_type) +
                 ": Q is zero");
    }
    if (r.eta <= 0)
      ctx.fail("eta n=" + std::to_string(n) + " is not positive");
  }
  ctx.out.body = {{"results", results}};
}

void cmd_wreath(Context &ctx)
{
  auto d = socle_degree(ctx.params.str("s"));
  auto m = ctx.params.u64("m");
  if (m < 1 || m > 8)
    throw UsageError("--m must lie in 1..8");
  WreathElement a, bw;
  try {
    a = parse_wreath(ctx.params.str("a"), d, m);
    bw = parse_wreath(ctx.params.str("b"), d, m);
  } catch (std::invalid_argument const &e) {
    throw UsageError(std::string("--a/--b: ") + e.what() +
                     "; write m components and a top, e.g. \"();()|(1 2)\"");
  }
  SamplingOptions o;
  o.samples = ctx.samples(10000);
  o.seed = ctx.config.seed;
  o.confidence = ctx.config.confidence;
  o.workers = ctx.workers();
  auto r = wreath_pins_montecarlo(a, bw, alternating_group(d), m, o);
  ctx.out.body = {{"s", ctx.params.str("s")}, {"m", m}, {"a", to_string(a)}, {"b", to_string(bw)},
                  {"report", to_json(r)}};
  ctx.out.table.header = {"s", "m", "a", "b", "samples", "seed", "p_ins", "half_width"};
  ctx.out.table.rows.push_back({ctx.params.str("s"), std::to_string(m), to_string(a), to_string(bw),
                                std::to_string(o.samples), std::to_string(o.seed),
                                num(r.p_ins_estimate.estimate), num(r.p_ins_estimate.half_width)});
}

void cmd_two_coset(Context &ctx)
{
  auto n = ctx.params.u64("n");
  if (n < 5 || n > 7)
    throw UsageError("--n must lie in 5..7");
  Rational const target(53, 90);
  std::vector<std::pair<Permutation, std::string>> reps;
  if (ctx.params.has("x1") || ctx.params.has("x2")) {
    for (auto key : {"x1", "x2"}) {
      if (!ctx.params.has(key))
        throw UsageError("--x1 and --x2 go together");
    }
  } else {
    for (auto const &part : partitions(n))
      reps.push_back({class_representative(part, n), cycle_type_string(part)});
  }
  std::vector<std::pair<Permutation, Permutation>> pairs;
  if (reps.empty()) {
    auto x1 = parse_perm("x1", ctx.params.str("x1"), n);
    auto x2 = parse_perm("x2", ctx.params.str("x2"), n);
    pairs.push_back({x1, x2});
  } else {
    for (auto const &r1 : reps)
      for (auto const &r2 : reps)
        pairs.push_back({r1.first, r2.first});
  }
  ctx.out.table.header = {"n", "x1", "x2", "probability", "meets_53_90"};
  Json rows = Json::array();
  std::optional<Rational> least;
  for (auto const &[x1, x2] : pairs) {
    auto p = two_coset_generation_check(x1, x2, n, ctx.workers());
    bool ok = p >= target;
    rows.push_back({{"x1", to_json(x1)}, {"x2", to_json(x2)}, {"probability", to_json(p)},
                    {"meets_53_90", ok}});
    ctx.out.table.rows.push_back({std::to_string(n), to_cycle_string(x1), to_cycle_string(x2),
                                  to_fraction_string(p), b(ok)});
    if (!least || p < *least)
      least = p;
    if (!ok)
      ctx.fail("two-coset " + to_cycle_string(x1) + " " + to_cycle_string(x2) + ": " +
               to_fraction_string(p) + " < 53/90");
  }
  ctx.out.body = {{"n", n}, {"minimum", to_json(*least)}, {"pairs", rows}};
}

// ---- combinatorics ------------------------------------------------------

void verify_factorial(Context &ctx, std::size_t n_max, Json &body)
{
  std::uint64_t checked = 0;
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned a = 0; a < n; ++a) {
      auto c = factorial_identity_check(n, a);
      ++checked;
      ctx.out.table.rows.push_back({"factorial-identity", "n=" + std::to_string(n) + " a=" +
                                    std::to_string(a), to_fraction_string(c.lhs),
                                    to_fraction_string(c.rhs), b(c.equal)});
      if (!c.equal)
        ctx.fail("factorial-identity n=" + std::to_string(n) + " a=" + std::to_string(a));
    }
  body["factorial-identity"] = {{"n_max", n_max}, {"cases", checked}};
}

void verify_iota(Context &ctx, std::size_t omega_max, Json &body)
{
  Json rows = Json::array();
  for (std::size_t n = 1; n <= omega_max; ++n)
    for (std::size_t a = 0; a <= n; ++a) {
      auto c = iota_count(n, a, ctx.workers());
      auto expected = factorial(unsigned(n - 1)) * a;
      bool ok = BigInt(c.total) == expected && c.total == c.even + c.odd;
      bool split = n - a < 2 || c.even == c.odd;
      rows.push_back(to_json(c));
      std::string id = "n=" + std::to_string(n) + " a=" + std::to_string(a);
      ctx.out.table.rows.push_back({"iota", id, std::to_string(c.total), expected.str(),
                                    b(ok && split)});
      if (!ok)
        ctx.fail("iota " + id + ": total " + std::to_string(c.total) + " != " + expected.str());
      if (!split)
        ctx.fail("iota " + id + ": even " + std::to_string(c.even) + " != odd " +
                 std::to_string(c.odd));
    }
  body["iota"] = {{"omega_max", omega_max}, {"counts", rows}};
}

std::vector<Point> mask_points(unsigned mask)
{
  std::vector<Point> v;
  for (Point i = 0; mask; ++i, mask >>= 1)
    if (mask & 1)
      v.push_back(i);
  return v;
}

void verify_kappa(Context &ctx, std::size_t omega_max, Json &body)
{
  std::uint64_t checked = 0;
  for (std::size_t n = 1; n <= omega_max; ++n)
    for (unsigned amask = 1; amask < (1u << n); ++amask) {
      auto a = mask_points(amask);
      std::uint64_t sum = 0;
      for (unsigned bmask = amask; bmask; bmask = (bmask - 1) & amask) {
        auto bs = mask_points(bmask);
        auto k = kappa_count(n, a, bs, ctx.workers());
        ++checked;
        sum += k.exhaustive;
        if (BigInt(k.exhaustive) != k.closed_form)
          ctx.fail("kappa n=" + std::to_string(n) + " A=" + std::to_string(amask) +
                   " B=" + std::to_string(bmask) + ": " + std::to_string(k.exhaustive) +
                   " != " + k.closed_form.str());
      }
      auto iota = iota_count(n, a.size(), ctx.workers()).total;
      std::string id = "n=" + std::to_string(n) + " A=" + std::to_string(amask);
      ctx.out.table.rows.push_back({"kappa-sum", id, std::to_string(sum), std::to_string(iota),
                                    b(sum == iota)});
      if (sum != iota)
        ctx.fail("kappa sum " + id + ": " + std::to_string(sum) + " != " + std::to_string(iota));
    }
  body["kappa"] = {{"omega_max", omega_max}, {"cases", checked}};
}

void verify_facile(Context &ctx, std::size_t n_max, Json &body)
{
  Json rows = Json::array();
  for (std::size_t n = 2; n <= n_max; ++n)
    for (std::size_t k = std::max<std::size_t>(2, (n + 1) / 2); k <= n; ++k) {
      auto f = facile_count(n, k, ctx.workers());
      rows.push_back(to_json(f));
      std::string id = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      ctx.out.table.rows.push_back({"facile", id, std::to_string(f.exact),
                                    f.closed_form.str() + " >= " + to_fraction_string(f.bound),
                                    b(f.matches_closed_form && f.meets_bound)});
      if (!f.matches_closed_form)
        ctx.fail("facile " + id + ": exact " + std::to_string(f.exact) + " != closed form " +
                 f.closed_form.str());
      if (!f.meets_bound)
        ctx.fail("facile " + id + ": exact " + std::to_string(f.exact) + " below bound " +
                 to_fraction_string(f.bound));
    }
  body["facile"] = {{"n_max", n_max}, {"counts", rows}};
}

void verify_fact1(Context &ctx, std::size_t omega_max, Json &body)
{
  std::uint64_t checked = 0;
  for (std::size_t n = 1; n <= omega_max; ++n)
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      bool ok = fact1_check(n, mask_points(mask), ctx.workers());
      ++checked;
      if (!ok)
        ctx.fail("fact1 n=" + std::to_string(n) + " R=" + std::to_string(mask));
    }
  ctx.out.table.rows.push_back({"fact1", "omega<=" + std::to_string(omega_max),
                                std::to_string(checked), "", b(true)});
  body["fact1"] = {{"omega_max", omega_max}, {"cases", checked}};
}

void verify_fact2(Context &ctx, std::uint64_t instances, std::size_t degree, Json &body)
{
  std::mt19937_64 rng(stream_seed(ctx.config.seed, 0xfac72));
  std::uint64_t passed = 0;
  for (std::uint64_t t = 0; t < instances; ++t) {
    unsigned mask = std::uniform_int_distribution<unsigned>(1, (1u << degree) - 1)(rng);
    auto r = mask_points(mask);
    std::vector<Permutation> gens;
    // G moves only points of r, as when r = Omega - Fix(G)
    for (unsigned g = 0; g < 1 + t % 3; ++g) {
      auto local = r;
      std::shuffle(local.begin(), local.end(), rng);
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), 0u);
      for (std::size_t i = 0; i < r.size(); ++i)
        images[r[i]] = local[i];
      gens.push_back(Permutation(images));
    }
    std::vector<Point> sigma(degree);
    std::iota(sigma.begin(), sigma.end(), 0u);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    bool ok = fact2_check(gens, Permutation(sigma), r);
    passed += ok;
    if (!ok)
      ctx.fail("fact2 instance " + std::to_string(t));
  }
  ctx.out.table.rows.push_back({"fact2", std::to_string(instances) + " instances",
                                std::to_string(passed), std::to_string(instances),
                                b(passed == instances)});
  body["fact2"] = {{"instances", instances}, {"degree", degree}, {"passed", passed}};
}

void verify_fpagl(Context &ctx, unsigned q_max, Json &body)
{
  Json rows = Json::array();
  for (unsigned q = 2; q <= q_max; ++q) {
    if (!prime_power(q))
      continue;
    auto r = fpagl_check(q);
    rows.push_back(to_json(r));
    ctx.out.table.rows.push_back({"fpagl", "q=" + std::to_string(q), std::to_string(r.max_fix),
                                  num(r.sqrt_q), b(r.pass)});
    if (!r.pass)
      ctx.fail("fpagl q=" + std::to_string(q) + ": " + std::to_string(r.max_fix) +
               " fixed points");
  }
  body["fpagl"] = {{"q_max", q_max}, {"fields", rows}};
}

std::size_t capped(Context &ctx, std::string const &key, std::size_t hard_max)
{
  auto v = ctx.params.has(key) ? ctx.params.u64(key)
                               : std::min<std::uint64_t>(hard_max, ctx.degree_ceiling());
  if (v > hard_max)
    throw UsageError("--" + key + " is limited to " + std::to_string(hard_max));
  return v;
}

std::vector<std::string> const verify_header{"check", "case", "actual", "expected", "pass"};

void cmd_verify_factorial(Context &ctx)
{
  ctx.out.table.header = verify_header;
  auto n_max = ctx.params.u64("n-max");
  if (n_max > 200)
    throw UsageError("--n-max is limited to 200");
  verify_factorial(ctx, n_max, ctx.out.body);
}

void cmd_verify_iota(Context &ctx)
{
  ctx.out.table.header = verify_header;
  verify_iota(ctx, capped(ctx, "omega-max", 9), ctx.out.body);
}

void cmd_verify_kappa(Context &ctx)
{
  ctx.out.table.header = verify_header;
  verify_kappa(ctx, capped(ctx, "omega-max", 8), ctx.out.body);
}

void cmd_verify_facile(Context &ctx)
{
  ctx.out.table.header = verify_header;
  verify_facile(ctx, capped(ctx, "n-max", 9), ctx.out.body);
}

void cmd_verify_fact1(Context &ctx)
{
  ctx.out.table.header = verify_header;
  verify_fact1(ctx, capped(ctx, "omega-max", 8), ctx.out.body);
}

void cmd_verify_fact2(Context &ctx)
{
  ctx.out.table.header = verify_header;
  auto degree = ctx.params.u64("degree");
  if (degree < 1 || degree > 16)
    throw UsageError("--degree must lie in 1..16");
  verify_fact2(ctx, ctx.params.u64("instances"), degree, ctx.out.body);
}

void cmd_verify_all(Context &ctx)
{
  ctx.out.table.header = verify_header;
  auto deg = ctx.degree_ceiling();
  Json &body = ctx.out.body;
  body["level"] = name(ctx.config.level);
  verify_factorial(ctx, 30, body);
  verify_iota(ctx, std::min<std::size_t>(8, deg), body);
  verify_kappa(ctx, std::min<std::size_t>(7, deg), body);
  verify_facile(ctx, deg, body);
  verify_fact1(ctx, std::min<std::size_t>(7, deg), body);
  verify_fact2(ctx, 200, 7, body);
  verify_fpagl(ctx, 81, body);
}

void cmd_lambda_rate(Context &ctx)
{
  auto n = ctx.params.u64("n");
  auto d1 = ctx.params.real("delta1");
  auto d2 = ctx.params.real("delta2");
  if (n < 2 || n > 100000)
    throw UsageError("--n must lie in 2..100000");
  auto samples = ctx.samples(100000);
  auto r = lambda_rate(n, d1, d2, samples, ctx.config.seed, ctx.config.confidence, ctx.workers());
  ctx.out.body = {{"delta1", d1}, {"delta2", d2}, {"samples", samples},
                  {"seed", ctx.config.seed}, {"rate", to_json(r)}};
  ctx.out.table.header = {"n", "delta1", "delta2", "samples", "seed", "estimate",
                          "half_width", "exact", "bound"};
  ctx.out.table.rows.push_back({std::to_string(n), num(d1), num(d2), std::to_string(samples),
                                std::to_string(ctx.config.seed), num(r.estimate.estimate),
                                num(r.estimate.half_width), to_fraction_string(r.exact),
                                num(r.bound)});
  if (r.estimate.estimate < r.bound)
    ctx.fail("lambda-rate n=" + std::to_string(n) + ": estimate " + num(r.estimate.estimate) +
             " below " + num(r.bound));
}

void cmd_nontransitivity(Context &ctx)
{
  auto n = ctx.params.u64("n");
  if (n < 2 || n > 1000)
    throw UsageError("--n must lie in 2..1000");
  auto g = parse_perm("g", ctx.params.str("g"), n);
  auto rho = parse_perm("rho", ctx.params.str("rho"), n);
  std::vector<Permutation> gens{g};
  auto samples = ctx.samples(100000);
  auto r = nontransitivity_rate(gens, rho, samples, ctx.config.seed, ctx.config.confidence,
                                ctx.workers());
  ctx.out.body = {{"n", n}, {"g", to_json(g)}, {"rho", to_json(rho)}, {"samples", samples},
                  {"seed", ctx.config.seed}, {"rate", to_json(r)}};
  ctx.out.table.header = {"n", "fixed", "samples", "seed", "estimate", "half_width", "exact",
                          "reference", "slack"};
  ctx.out.table.rows.push_back({std::to_string(n), std::to_string(r.fixed),
                                std::to_string(samples), std::to_string(ctx.config.seed),
                                num(r.estimate.estimate), num(r.estimate.half_width),
                                r.exact ? to_fraction_string(*r.exact) : "", num(r.reference),
                                num(r.slack)});
  if (r.estimate.estimate > r.reference + r.slack)
    ctx.fail("nontransitivity: estimate " + num(r.estimate.estimate) + " above " +
             num(r.reference + r.slack));
  if (r.exact && to_double(*r.exact) >= r.reference + r.slack)
    ctx.fail("nontransitivity: exact rate " + to_fraction_string(*r.exact) + " above " +
             num(r.reference + r.slack));
}

// ---- number theory and fields --------------------------------------------

void cmd_totient_count(Context &ctx)
{
  auto n = ctx.params.u64("n");
  auto d1 = ctx.params.real("delta1");
  auto d2 = ctx.params.real("delta2");
  if (n > 500000000)
    throw UsageError("--n is limited to 5*10^8");
  std::uint64_t count = 0;
  try {
    count = totient_ratio_count(n, d1, d2);
  } catch (std::invalid_argument const &e) {
    throw UsageError(e.what());
  }
  Rational ratio(count, n);
  ctx.out.body = {{"n", n}, {"delta1", d1}, {"delta2", d2}, {"count", count},
                  {"ratio", to_json(ratio)}};
  ctx.out.table.header = {"n", "delta1", "delta2", "count", "ratio"};
  ctx.out.table.rows.push_back({std::to_string(n), num(d1), num(d2), std::to_string(count),
                                num(to_double(ratio))});
}

void cmd_bt(Context &ctx)
{
  auto limit = ctx.params.u64("limit");
  if (limit < 1000 || limit > 500000000)
    throw UsageError("--limit must lie in 10^3..5*10^8");
  std::vector<double> ts;
  std::stringstream list(ctx.params.str("t"));
  for (std::string item; std::getline(list, item, ',');)
    ts.push_back(parse_real("t", trim(item)));
  if (ts.empty())
    throw UsageError("--t needs at least one value");
  ctx.out.table.header = {"t", "limit", "b", "b_decimal", "complement", "erdos_reference"};
  Json rows = Json::array();
  for (double t : ts) {
    if (t < 1)
      throw UsageError("--t values must be >= 1 (B(t) = 1 below that)");
    auto bval = b_empirical(t, static_cast<std::uint32_t>(limit));
    double bd = to_double(bval);
    Json row{{"t", t}, {"b", to_json(bval)}, {"b_decimal", bd}};
    std::string ref;
    if (t > 1 && t < 2) {
      // asymptotic sanity check only: e^-gamma / log(1/eps) tracks 1 - B(1 + eps)
      double r = erdos_asymptotic(t - 1);
      row["complement"] = 1 - bd;
      row["erdos_reference"] = r;
      ref = num(r);
    }
    rows.push_back(row);
    ctx.out.table.rows.push_back({num(t), std::to_string(limit), to_fraction_string(bval), num(bd),
                                  num(1 - bd), ref});
  }
  ctx.out.body = {{"limit", limit}, {"values", rows}};
}

void cmd_fpagl(Context &ctx)
{
  auto q_max = ctx.params.u64("q-max");
  if (q_max < 2 || q_max > 81)
    throw UsageError("--q-max must lie in 2..81");
  Json body = Json::array();
  ctx.out.table.header = {"q", "max_fix", "sqrt_q", "pass"};
  for (unsigned q = 2; q <= q_max; ++q) {
    if (!prime_power(q))
      continue;
    auto r = fpagl_check(q);
    body.push_back(to_json(r));
    ctx.out.table.rows.push_back({std::to_string(q), std::to_string(r.max_fix), num(r.sqrt_q),
                                  b(r.pass)});
    if (!r.pass)
      ctx.fail("fpagl q=" + std::to_string(q) + ": " + std::to_string(r.max_fix) +
               " fixed points");
  }
  ctx.out.body = {{"q_max", q_max}, {"fields", body}};
}

// ---- solubilizers ---------------------------------------------------------

SolubilizerOptions solubilizer_options(Context const &ctx)
{
  SolubilizerOptions o;
  if (ctx.config.exact_ceiling)
    o.ceiling = *ctx.config.exact_ceiling;
  o.workers = ctx.workers();
  return o;
}

void cmd_solubilizer(Context &ctx)
{
  auto c = construction("group", ctx.params.str("group"));
  auto g = element("g", ctx.params.str("g"), c);
  if (!c.group.contains(g))
    throw UsageError("--g is not an element of " + c.name);
  auto r = solubilizer_set(c.group, g, solubilizer_options(ctx));
  ctx.out.body = {{"group", c.name}, {"solubilizer", to_json(r)}};
  ctx.out.table.header = {"group", "g", "order", "size", "ratio"};
  ctx.out.table.rows.push_back({c.name, to_cycle_string(g), r.group_order.str(),
                                std::to_string(r.solubilizer_size), to_fraction_string(r.ratio)});
}

Rational parse_eta(std::string const &v, Context const &ctx)
{
  static std::regex const from_exact(R"(from-eta-exact:(\d+))");
  std::smatch m;
  if (std::regex_match(v, m, from_exact)) {
    auto n = std::stoul(m[1]);
    if (n < 5 || n > 8)
      throw UsageError("--eta from-eta-exact:<n> needs n in 5..8");
    return eta_exact(n, {ctx.coset_ceiling(), ctx.workers()}).eta;
  }
  try {
    auto r = parse_fraction(v);
    if (r <= 0 || r >= 1)
      throw UsageError("--eta must lie strictly between 0 and 1");
    return r;
  } catch (std::invalid_argument const &) {
    throw UsageError("--eta expects p/q or from-eta-exact:<n>, got '" + v + "'");
  }
}

void cmd_crucial(Context &ctx)
{
  auto c = construction("construction", ctx.params.str("construction"));
  auto g = element("g", ctx.params.str("g"), c);
  if (!c.group.contains(g))
    throw UsageError("--g is not an element of " + c.name);
  auto eta = parse_eta(ctx.params.str("eta"), ctx);
  auto r = crucial_bound_check(c.series, g, eta, solubilizer_options(ctx));
  ctx.out.body = {{"construction", c.name}, {"eta", to_json(eta)}, {"crucial", to_json(r)}};
  ctx.out.table.header = {"construction", "g", "t", "ratio", "bound", "holds"};
  ctx.out.table.rows.push_back({c.name, to_cycle_string(g), std::to_string(r.t),
                                to_fraction_string(r.ratio), to_fraction_string(r.bound),
                                b(r.holds)});
  if (!r.holds)
    ctx.fail("crucial " + c.name + ": ratio " + to_fraction_string(r.ratio) + " exceeds bound " +
             to_fraction_string(r.bound));
}

void cmd_ccent(Context &ctx)
{
  auto c = construction("construction", ctx.params.str("construction"));
  auto x = element("x", ctx.params.str("x"), c);
  auto y = element("y", ctx.params.str("y"), c);
  CcentResult r;
  try {
    r = ccent_check(c.series, x, y);
  } catch (std::invalid_argument const &e) {
    throw UsageError(std::string(e.what()) + "; x and y must generate the whole group");
  }
  ctx.out.body = {{"construction", c.name}, {"x", to_json(x)}, {"y", to_json(y)},
                  {"ccent", to_json(r)}};
  ctx.out.table.header = {"construction", "step", "derived_condition", "centralizer_condition"};
  for (std::size_t i = 0; i < r.steps.size(); ++i)
    ctx.out.table.rows.push_back({c.name, std::to_string(i), b(r.steps[i].derived_condition),
                                  b(r.steps[i].centralizer_condition)});
  if (r.hypothesis_holds && !r.ambient_soluble)
    ctx.fail("ccent " + c.name + ": chain condition holds but the group is insoluble");
}

void cmd_soluble(Context &ctx)
{
  auto c = construction("group", ctx.params.str("group"));
  auto cert = is_soluble(c.group);
  ctx.out.body = {{"group", c.name}, {"order", to_json(c.group.order())},
                  {"certificate", to_json(cert)}};
  std::string orders;
  for (auto const &o : cert.derived_orders)
    orders += (orders.empty() ? "" : " ") + o.str();
  ctx.out.table.header = {"group", "verdict", "derived_orders"};
  ctx.out.table.rows.push_back(
    {c.name, cert.verdict == Verdict::soluble ? "soluble" : "insoluble", orders});
}

using Handler = std::function<void(Context &)>;

struct Entry {
  CommandSpec spec;
  Handler handler;
};

std::vector<Entry> const &entries()
{
  static std::vector<Entry> const table{
    {{"pins", "P_ins(Alt(n), a, b) for b in one coset of Alt(n) in Sym(n)",
      {{"n", "degree", "5"},
       {"a", "automorphism a in cycle notation", ""},
       {"coset", "even or odd", "even"},
       {"exact", "enumerate the coset (default unless --samples is given)", "", true}}},
     cmd_pins},
    {{"eta", "eta(n) = min P_ins over classes of a != 1 and both cosets",
      {{"n", "degree or range, e.g. 5..7", "5"}}},
     cmd_eta},
    {{"wreath", "Monte Carlo P_ins(S^m, a, b) in Aut(S) wr Sym(m)",
      {{"s", "socle factor, e.g. alt5", "alt5"},
       {"m", "number of factors", "2"},
       {"a", "wreath element \"c_1;...;c_m|top\"", "();()|(1 2)"},
       {"b", "wreath element \"c_1;...;c_m|top\"", "();()|()"}}},
     cmd_wreath},
    {{"two-coset", "probability that <s1 x1, s2 x2> contains Alt(n), every class pair by default",
      {{"n", "degree (5..7)", "5"},
       {"x1", "first coset representative", "", false, true},
       {"x2", "second coset representative", "", false, true}}},
     cmd_two_coset},
    {{"verify factorial-identity", "exact factorial sum identity for 0 <= a < n <= n-max",
      {{"n-max", "largest n", "30"}}},
     cmd_verify_factorial},
    {{"verify iota", "permutations with an invariant subset of A, exhaustively",
      {{"omega-max", "largest |Omega| (default from --level)", "", false, true}}},
     cmd_verify_iota},
    {{"verify kappa", "kappa decomposition against its closed form",
      {{"omega-max", "largest |Omega| (default from --level)", "", false, true}}},
     cmd_verify_kappa},
    {{"verify facile", "long cycles through two points: count and lower bound",
      {{"n-max", "largest n (default from --level)", "", false, true}}},
     cmd_verify_facile},
    {{"verify fact1", "projection preimages all have size |Omega|!/|R|!",
      {{"omega-max", "largest |Omega| (default from --level)", "", false, true}}},
     cmd_verify_fact1},
    {{"verify fact2", "orbits of <G, sigma> against <G, pr_R(sigma)> on random instances",
      {{"instances", "number of random instances", "200"}, {"degree", "degree", "7"}}},
     cmd_verify_fact2},
    {{"verify all", "every verification at the ceilings of --level", {}}, cmd_verify_all},
    {{"lambda-rate", "Monte Carlo density of the set Lambda(delta1, delta2) in Sym(n)",
      {{"n", "degree", "40"}, {"delta1", "cycle length fraction", "0.6"},
       {"delta2", "totient fraction", "0.3"}}},
     cmd_lambda_rate},
    {{"nontransitivity", "probability that <g, sigma> is intransitive for sigma in rho Alt(n)",
      {{"n", "degree", "50"}, {"g", "generator of G", "(1 2)"},
       {"rho", "coset representative", "()"}}},
     cmd_nontransitivity},
    {{"totient-count", "integers m in [delta1 n, n] with phi(m) >= delta2 m",
      {{"n", "upper end", "1000000"}, {"delta1", "interval start fraction", "0.5"},
       {"delta2", "totient fraction", "0.3"}}},
     cmd_totient_count},
    {{"bt", "fraction of m <= limit with m/phi(m) >= t",
      {{"t", "threshold, or a comma separated list", "1.1"},
       {"limit", "sieve limit", "10000000"}}},
     cmd_bt},
    {{"fpagl", "largest fixed point count in AGammaL(1, q) for prime powers q <= q-max",
      {{"q-max", "largest q (at most 81)", "81"}}},
     cmd_fpagl},
    {{"solubilizer", "|S_G(g)| / |G| by enumeration",
      {{"group", "recipe: alt<n>, sym<n>, alt<n>^<m>:swap, alt<n>wrC<m>", "alt5"},
       {"g", "element in cycle notation or a named element", "(1 2 3 4 5)"}}},
     cmd_solubilizer},
    {{"crucial", "solubilizer density against (1 - min(eta, 53/90))^t",
      {{"construction", "group recipe with its normal series", "alt5^2:swap"},
       {"g", "element or named element", "swap"},
       {"eta", "p/q or from-eta-exact:<n>", "from-eta-exact:5"}}},
     cmd_crucial},
    {{"ccent", "chain criterion for <x, y> against the recipe's normal series",
      {{"construction", "group recipe", "sym4"},
       {"x", "first generator", "(1 2)"},
       {"y", "second generator", "(1 2 3 4)"}}},
     cmd_ccent},
    {{"soluble", "solubility certificate of a named group",
      {{"group", "group recipe", "sym4"}}},
     cmd_soluble},
  };
  return table;
}

std::string iso_timestamp()
{
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void render_pretty(std::ostream &out, Json const &j, int indent)
{
  std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto const &v = it.value();
    std::string key = j.is_object() ? it.key() + ":" : "-";
    bool nested = (v.is_object() && !v.empty()) ||
                  (v.is_array() && std::any_of(v.begin(), v.end(), [](auto const &e) {
                     return e.is_structured();
                   }));
    if (nested) {
      out << pad << key << '\n';
      render_pretty(out, v, indent + 2);
    } else if (v.is_string()) {
      out << pad << key << ' ' << v.get<std::string>() << '\n';
    } else {
      out << pad << key << ' ' << v.dump() << '\n';
    }
  }
}

} // namespace

OutputFormat parse_output(std::string_view s)
{
  if (s == "json")
    return OutputFormat::json;
  if (s == "csv")
    return OutputFormat::csv;
  if (s == "pretty")
    return OutputFormat::pretty;
  throw UsageError("--output must be json, csv or pretty, got '" + std::string(s) + "'");
}

Level parse_level(std::string_view s)
{
  if (s == "smoke")
    return Level::smoke;
  if (s == "desk")
    return Level::desk;
  if (s == "deep")
    return Level::deep;
  throw UsageError("--level must be smoke, desk or deep, got '" + std::string(s) + "'");
}

char const *name(OutputFormat f)
{
  switch (f) {
  case OutputFormat::json: return "json";
  case OutputFormat::csv: return "csv";
  case OutputFormat::pretty: return "pretty";
  }
  return "?";
}

char const *name(Level l)
{
  switch (l) {
  case Level::smoke: return "smoke";
  case Level::desk: return "desk";
  case Level::deep: return "deep";
  }
  return "?";
}

LevelPreset preset(Level level)
{
  switch (level) {
  case Level::smoke: return {6, 1000};
  case Level::desk: return {8, 100000};
  case Level::deep: return {9, 500000};
  }
  return {8, 100000};
}

std::vector<CommandSpec> const &command_specs()
{
  static std::vector<CommandSpec> const specs = [] {
    std::vector<CommandSpec> out;
    for (auto const &e : entries())
      out.push_back(e.spec);
    return out;
  }();
  return specs;
}

CommandSpec const *find_command(std::string_view name)
{
  for (auto const &s : command_specs())
    if (s.name == name)
      return &s;
  return nullptr;
}

std::string to_text(RunConfig const &c)
{
  std::ostringstream s;
  s << "# solab run configuration\n";
  s << "command = " << c.command << '\n';
  s << "seed = " << c.seed << '\n';
  s << "output = " << name(c.output) << '\n';
  s << "level = " << name(c.level) << '\n';
  s << "workers = " << c.workers << '\n';
  s << "confidence = " << num(c.confidence) << '\n';
  if (c.samples)
    s << "samples = " << *c.samples << '\n';
  if (c.exact_ceiling)
    s << "exact-ceiling = " << *c.exact_ceiling << '\n';
  for (auto const &[k, v] : c.params)
    s << k << " = " << v << '\n';
  return s.str();
}

RunConfig parse_config(std::string_view text)
{
  RunConfig c;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    auto key = trim(t.substr(0, eq));
    auto value = trim(t.substr(eq + 1));
    if (key == "command")
      c.command = value;
    else if (key == "seed")
      c.seed = parse_u64(key, value);
    else if (key == "output")
      c.output = parse_output(value);
    else if (key == "level")
      c.level = parse_level(value);
    else if (key == "workers")
      c.workers = static_cast<unsigned>(parse_u64(key, value));
    else if (key == "confidence")
      c.confidence = parse_real(key, value);
    else if (key == "samples")
      c.samples = parse_u64(key, value);
    else if (key == "exact-ceiling")
      c.exact_ceiling = parse_u64(key, value);
    else
      c.params[key] = value;
  }
  return c;
}

RunConfig load_config(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read config file " + path);
  std::stringstream s;
  s << in.rdbuf();
  return parse_config(s.str());
}

void save_config(RunConfig const &config, std::string const &path)
{
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write config file " + path);
  out << to_text(config);
}

Json RunOutcome::report(RunConfig const &config) const
{
  Json config_echo;
  config_echo["command"] = config.command;
  config_echo["seed"] = config.seed;
  config_echo["output"] = name(config.output);
  config_echo["level"] = name(config.level);
  config_echo["workers"] = config.workers;
  config_echo["confidence"] = config.confidence;
  config_echo["samples"] = config.samples ? Json(*config.samples) : Json(nullptr);
  config_echo["exact_ceiling"] = config.exact_ceiling ? Json(*config.exact_ceiling) : Json(nullptr);
  config_echo["params"] = config.params;
  return {{"command", command},
          {"status", passed() ? "pass" : "fail"},
          {"failures", failures},
          {"body", body},
          {"provenance",
           {{"artifact", "solab"},
            {"version", artifact_version},
            {"config", config_echo},
            {"wall_time_seconds", wall_seconds},
            {"timestamp", iso_timestamp()}}}};
}

RunOutcome run(RunConfig const &config)
{
  Entry const *entry = nullptr;
  for (auto const &e : entries())
    if (e.spec.name == config.command)
      entry = &e;
  if (!entry)
    throw UsageError("unknown command '" + config.command + "'; run solab --help for the list");
  if (config.workers == 0)
    throw UsageError("--workers must be at least 1");
  if (!(config.confidence > 0 && config.confidence < 1))
    throw UsageError("--confidence must lie strictly between 0 and 1");
  if (config.samples && *config.samples == 0)
    throw UsageError("--samples must be at least 1");

  Params params(config, entry->spec);
  RunOutcome out;
  out.command = config.command;
  out.body = Json::object();
  Context ctx{config, params, out};
  set_default_workers(config.workers);
  auto start = std::chrono::steady_clock::now();
  try {
    entry->handler(ctx);
  } catch (UsageError const &) {
    throw;
  } catch (std::invalid_argument const &e) {
    throw UsageError(config.command + ": " + e.what());
  } catch (std::domain_error const &e) {
    throw UsageError(config.command + ": " + e.what());
  }
  out.wall_seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string render(RunOutcome const &outcome, RunConfig const &config)
{
  switch (config.output) {
  case OutputFormat::json:
    return outcome.report(config).dump(2) + "\n";
  case OutputFormat::csv:
    return outcome.table.render();
  case OutputFormat::pretty: {
    std::ostringstream s;
    s << "solab " << outcome.command << '\n';
    render_pretty(s, outcome.body, 2);
    s << (outcome.passed() ? "status: pass" : "status: fail") << '\n';
    for (auto const &f : outcome.failures)
      s << "  FAIL " << f << '\n';
    return s.str();
  }
  }
  return {};
}

int exit_code(RunOutcome const &outcome) { return outcome.passed() ? 0 : 1; }

} // namespace solab
