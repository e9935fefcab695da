#include "solab/insolubility.h"

#include <array>
#include <stdexcept>

#include "solab/analysis.h"
#include "solab/constructions.h"
#include "solab/parallel.h"

namespace solab {

namespace {

constexpr std::uint64_t exact_chunk = 256;
constexpr std::uint64_t sample_chunk = 128;
constexpr std::size_t max_witnesses = 3;

struct Tally {
  std::uint64_t insoluble = 0;
  std::uint64_t contains_socle = 0;
  std::vector<Permutation> witnesses;
};

struct PairOutcome {
  bool insoluble;
  bool contains_alt;
};

PairOutcome classify_pair(Permutation const &a, Permutation const &y, BigInt const &half_factorial)
{
  std::array<Permutation, 2> gens{a, y};
  Bsgs bsgs(a.degree(), gens);
  return {!soluble(gens, bsgs), bsgs.order() >= half_factorial};
}

Tally merge(std::vector<Tally> const &parts)
{
  Tally total;
  for (auto const &t : parts) {
    total.insoluble += t.insoluble;
    total.contains_socle += t.contains_socle;
    for (auto const &w : t.witnesses) {
      if (total.witnesses.size() < max_witnesses)
        total.witnesses.push_back(w);
    }
  }
  return total;
}

unsigned resolve(unsigned workers)
{
  return workers ? workers : default_workers();
}

void check_a(Permutation const &a, CosetSpec const &coset)
{
  if (a.degree() != coset.degree())
    throw std::invalid_argument("a has degree " + std::to_string(a.degree()) +
                                ", coset has degree " + std::to_string(coset.degree()));
  if (a.is_identity())
    throw std::invalid_argument("a must not be the identity");
  if (!coset.ambient().contains(a))
    throw std::invalid_argument("a = " + to_cycle_string(a) + " is not in the ambient group");
}

std::vector<std::string> coset_flags(CosetSpec const &coset)
{
  if (coset.socle_is_alternating() && coset.degree() == 6)
    return {"aut_restricted_to_sym6"};
  return {};
}

} // namespace

CosetSpec::CosetSpec(GroupHandle ambient, GroupHandle socle, Permutation rep)
  : ambient_(std::move(ambient)), socle_(std::move(socle)), rep_(std::move(rep))
{
  if (socle_.degree() != ambient_.degree() || rep_.degree() != ambient_.degree())
    throw std::invalid_argument("coset components have different degrees");
  for (auto const &s : socle_.generators()) {
    if (!ambient_.contains(s))
      throw std::invalid_argument("socle generator " + to_cycle_string(s) +
                                  " is not in the ambient group");
  }
  if (!ambient_.contains(rep_))
    throw std::invalid_argument("coset representative is not in the ambient group");

  std::size_t n = degree();
  socle_is_alt_ = n >= 5 && 2 * socle_.order() == factorial(static_cast<unsigned>(n));
}

CosetSpec CosetSpec::alternating(std::size_t n, Parity coset)
{
  if (n < 5)
    throw std::invalid_argument("alternating socle needs n >= 5");
  Permutation rep(n);
  if (coset == Parity::odd)
    rep = Permutation::from_cycles(n, {{0, 1}});
  return CosetSpec(symmetric_group(n), alternating_group(n), rep);
}

InsolubilityReport pins_exact(Permutation const &a, CosetSpec const &coset,
                              ExactOptions const &options)
{
  check_a(a, coset);
  auto population = coset.socle().bsgs().order_u64();
  if (!population || *population > options.ceiling)
    throw std::invalid_argument("|S| = " + coset.socle().order().str() +
                                " exceeds the exact-mode ceiling " +
                                std::to_string(options.ceiling) +
                                "; use Monte Carlo sampling or raise the ceiling");

  std::size_t n = coset.degree();
  BigInt half_factorial = factorial(static_cast<unsigned>(n)) / 2;
  bool want_q = coset.socle_is_alternating();

  auto parts = parallel_chunks<Tally>(
    *population, exact_chunk, resolve(options.workers),
    [&](std::uint64_t begin, std::uint64_t end) {
      Tally t;
      for (std::uint64_t i = begin; i < end; ++i) {
        Permutation s = coset.socle().element_at(i);
        auto outcome = classify_pair(a, coset.rep() * s, half_factorial);
        if (outcome.insoluble) {
          ++t.insoluble;
          if (t.witnesses.size() < max_witnesses)
            t.witnesses.push_back(s);
        }
        if (want_q && outcome.contains_alt)
          ++t.contains_socle;
      }
      return t;
    });
  Tally total = merge(parts);

  InsolubilityReport report;
  report.kind = ReportKind::exact;
  report.population = *population;
  report.count_insoluble = total.insoluble;
  report.count_contains_socle = total.contains_socle;
  report.p_ins = Rational(total.insoluble, *population);
  if (want_q)
    report.q_value = Rational(total.contains_socle, *population);
  report.witnesses = std::move(total.witnesses);
  report.flags = coset_flags(coset);
  return report;
}

InsolubilityReport pins_montecarlo(Permutation const &a, CosetSpec const &coset,
                                   SamplingOptions const &options)
{
  check_a(a, coset);
  if (options.samples < 100)
    throw std::invalid_argument("Monte Carlo mode needs at least 100 samples");

  std::size_t n = coset.degree();
  BigInt half_factorial = factorial(static_cast<unsigned>(n)) / 2;
  bool want_q = coset.socle_is_alternating();
  coset.socle().bsgs();

  auto parts = parallel_chunks<Tally>(
    options.samples, sample_chunk, resolve(options.workers),
    [&](std::uint64_t begin, std::uint64_t end) {
      Tally t;
      for (std::uint64_t i = begin; i < end; ++i) {
        SplitMix64 rng(stream_seed(options.seed, i));
        Permutation s = coset.socle().random_element(rng);
        auto outcome = classify_pair(a, coset.rep() * s, half_factorial);
        if (outcome.insoluble) {
          ++t.insoluble;
          if (t.witnesses.size() < max_witnesses)
            t.witnesses.push_back(s);
        }
        if (want_q && outcome.contains_alt)
          ++t.contains_socle;
      }
      return t;
    });
  Tally total = merge(parts);

  InsolubilityReport report;
  report.kind = ReportKind::montecarlo;
  report.samples = options.samples;
  report.seed = options.seed;
  report.count_insoluble = total.insoluble;
  report.count_contains_socle = total.contains_socle;
  report.p_ins_estimate = wilson_interval(total.insoluble, options.samples, options.confidence);
  if (want_q)
    report.q_estimate = wilson_interval(total.contains_socle, options.samples, options.confidence);
  report.witnesses = std::move(total.witnesses);
  report.flags = coset_flags(coset);
  return report;
}

EtaResult eta_exact(std::size_t n, ExactOptions const &options, std::size_t max_n)
{
  if (n < 5 || n > max_n)
    throw std::invalid_argument("eta_exact needs 5 <= n <= " + std::to_string(max_n) +
                                ", got " + std::to_string(n));

  EtaResult result;
  result.n = n;
  if (n == 6)
    result.flags.push_back("aut_restricted_to_sym6");

  std::array<CosetSpec, 2> cosets{CosetSpec::alternating(n, Parity::even),
                                   CosetSpec::alternating(n, Parity::odd)};

  for (auto const &lambda : partitions(n)) {
    if (lambda.front() == 1)
      continue; // identity
    Permutation a = class_representative(lambda, n);
    for (auto const &coset : cosets) {
      auto report = pins_exact(a, coset, options);
      result.table.push_back({lambda, a, is_even(coset.rep()) ? Parity::even : Parity::odd,
                              report.p_ins, report.q_value.value_or(Rational(0))});
    }
  }

  result.eta = result.table.front().p_ins;
  for (auto const &row : result.table) {
    if (row.p_ins < result.eta)
      result.eta = row.p_ins;
  }
  for (std::size_t i = 0; i < result.table.size(); ++i) {
    if (result.table[i].p_ins == result.eta)
      result.argmin.push_back(i);
  }
  return result;
}

Rational two_coset_generation_check(Permutation const &x1, Permutation const &x2,
                                    std::size_t n, unsigned workers)
{
  if (n < 5 || n > 7)
    throw std::invalid_argument("two_coset_generation_check is exact-only, 5 <= n <= 7");
  if (x1.degree() != n || x2.degree() != n)
    throw std::invalid_argument("x1 and x2 must have degree n");

  // Simultaneous conjugation by Sym(n) fixes both cosets of Alt(n), so the
  // first element only matters up to its Sym(n)-class inside x1 Alt(n).
  GroupHandle alt = alternating_group(n);
  std::uint64_t alt_order = *alt.bsgs().order_u64();
  BigInt half_factorial = factorial(static_cast<unsigned>(n)) / 2;
  Parity first_parity = parity(x1);

  BigInt total = 0;
  for (auto const &lambda : partitions(n)) {
    Permutation u = class_representative(lambda, n);
    if (parity(u) != first_parity)
      continue;

    auto parts = parallel_chunks<std::uint64_t>(
      alt_order, exact_chunk, resolve(workers),
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
          std::array<Permutation, 2> gens{u, alt.element_at(i) * x2};
          if (Bsgs(n, gens).order() >= half_factorial)
            ++hits;
        }
        return hits;
      });

    std::uint64_t hits = 0;
    for (auto h : parts)
      hits += h;
    total += class_size(lambda, n) * hits;
  }
  return Rational(total, BigInt(alt_order) * alt_order);
}

} // namespace solab
