#include "solab/solubilizer.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "solab/analysis.h"
#include "solab/parallel.h"

namespace solab {

namespace {

bool all_in(std::vector<Permutation> const &elements, GroupHandle const &group)
{
  return std::all_of(elements.begin(), elements.end(),
                     [&](Permutation const &p) { return group.contains(p); });
}

} // namespace

NormalChain::NormalChain(GroupHandle ambient, std::vector<GroupHandle> subgroups)
  : ambient_(std::move(ambient)), subgroups_(std::move(subgroups))
{
  if (subgroups_.empty())
    throw std::invalid_argument("a normal chain needs at least N_0");

  auto const &top = subgroups_.front();
  if (!all_in(top.generators(), ambient_) || top.order() != ambient_.order())
    throw std::invalid_argument("N_0 is not the ambient group");
  if (!subgroups_.back().is_trivial())
    throw std::invalid_argument("the last subgroup of a normal chain must be trivial");

  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    auto const &n_i = subgroups_[i];
    if (n_i.degree() != ambient_.degree())
      throw std::invalid_argument("N_" + std::to_string(i) + " has the wrong degree");
    if (i > 0 && !all_in(n_i.generators(), subgroups_[i - 1]))
      throw std::invalid_argument("N_" + std::to_string(i) + " is not contained in N_" +
                                  std::to_string(i - 1));
    for (auto const &h : n_i.generators()) {
      for (auto const &g : ambient_.generators()) {
        if (!n_i.contains(h.conjugate(g)))
          throw std::invalid_argument("N_" + std::to_string(i) +
                                      " is not normal in the ambient group");
      }
    }
  }

  // N_{i+1} is normal, so generator commutators landing in it suffice.
  for (std::size_t i = 0; i + 1 < subgroups_.size(); ++i) {
    auto const &gens = subgroups_[i].generators();
    bool abelian_factor = true;
    for (std::size_t j = 0; j < gens.size() && abelian_factor; ++j) {
      for (std::size_t k = j + 1; k < gens.size(); ++k) {
        if (!subgroups_[i + 1].contains(commutator(gens[j], gens[k]))) {
          abelian_factor = false;
          break;
        }
      }
    }
    derived_.push_back(abelian_factor);
  }
}

bool NormalChain::centralizer_condition(std::size_t step, Permutation const &x) const
{
  for (auto const &h : subgroups_[step].generators()) {
    if (!subgroups_[step + 1].contains(commutator(h, x)))
      return false;
  }
  return true;
}

SolubilizerReport solubilizer_set(GroupHandle const &group, Permutation const &g,
                                  SolubilizerOptions const &options)
{
  if (!group.contains(g))
    throw std::invalid_argument("g = " + to_cycle_string(g) + " is not in the group");
  auto order = group.bsgs().order_u64();
  if (!order || *order > options.ceiling)
    throw std::invalid_argument("|G| = " + group.order().str() +
                                " exceeds the solubilizer ceiling " +
                                std::to_string(options.ceiling));

  std::vector<Permutation> powers{Permutation(g.degree())};
  for (std::uint64_t k = 1; k < g.order(); ++k)
    powers.push_back(powers.back() * g);

  auto verdict = [&](Permutation const &y) {
    std::vector<Permutation> gens{g, y};
    return soluble(gens);
  };

  unsigned workers = options.workers ? options.workers : default_workers();
  std::uint64_t chunk = (*order + workers - 1) / workers;

  auto parts = parallel_chunks<std::uint64_t>(
    *order, chunk, workers, [&](std::uint64_t begin, std::uint64_t end) {
      std::uint64_t count = 0;
      std::unordered_map<Permutation, bool, PermutationHash> cache;
      for (std::uint64_t i = begin; i < end; ++i) {
        Permutation y = group.element_at(i);
        if (!options.use_cache) {
          count += verdict(y);
          continue;
        }
        if (auto it = cache.find(y); it != cache.end()) {
          count += it->second;
          continue;
        }
        bool v = verdict(y);
        count += v;
        // <g, y> = <g, g^i y^(+-1) g^j>
        Permutation y_inv = y.inverse();
        for (auto const &left : powers) {
          Permutation ly = left * y;
          Permutation ly_inv = left * y_inv;
          for (auto const &right : powers) {
            cache.emplace(ly * right, v);
            cache.emplace(ly_inv * right, v);
          }
        }
      }
      return count;
    });

  SolubilizerReport report;
  report.group_order = *order;
  report.g = g;
  for (auto c : parts)
    report.solubilizer_size += c;
  report.ratio = Rational(report.solubilizer_size, *order);
  return report;
}

CcentResult ccent_check(NormalChain const &chain, Permutation const &x, Permutation const &y)
{
  auto const &ambient = chain.ambient();
  if (!ambient.contains(x) || !ambient.contains(y) ||
      GroupHandle({x, y}).order() != ambient.order())
    throw std::invalid_argument("<x, y> is not the ambient group of the chain");

  CcentResult result{true, std::nullopt, {}, false};
  for (std::size_t i = 0; i < chain.steps(); ++i) {
    CcentStep step{chain.derived_condition(i), chain.centralizer_condition(i, x)};
    result.steps.push_back(step);
    if (!step.derived_condition && !step.centralizer_condition && result.hypothesis_holds) {
      result.hypothesis_holds = false;
      result.failing_step = i;
    }
  }
  if (result.hypothesis_holds)
    result.ambient_soluble = is_soluble(ambient).verdict == Verdict::soluble;
  return result;
}

std::size_t t_centralizer_count(NormalChain const &series, Permutation const &g)
{
  if (!series.ambient().contains(g))
    throw std::invalid_argument("g = " + to_cycle_string(g) + " is not in the ambient group");
  std::size_t t = 0;
  for (std::size_t i = 0; i < series.steps(); ++i) {
    if (!series.derived_condition(i) && !series.centralizer_condition(i, g))
      ++t;
  }
  return t;
}

CrucialResult crucial_bound_check(NormalChain const &series, Permutation const &g,
                                  Rational const &eta, SolubilizerOptions const &options)
{
  CrucialResult result;
  result.t = t_centralizer_count(series, g);
  result.eta_tilde = std::min(eta, Rational(53, 90));
  result.solubilizer = solubilizer_set(series.ambient(), g, options);
  result.solubilizer.t_bound_used = result.t;
  result.solubilizer.eta_tilde = result.eta_tilde;
  result.ratio = result.solubilizer.ratio;
  result.bound = 1;
  for (std::size_t i = 0; i < result.t; ++i)
    result.bound *= 1 - result.eta_tilde;
  result.holds = result.ratio <= result.bound;
  return result;
}

} // namespace solab
