#include "solab/wreath.h"

#include <sstream>
#include <stdexcept>

#include "solab/analysis.h"
#include "solab/parallel.h"
#include "solab/stats.h"

namespace solab {

Permutation WreathElement::to_permutation() const
{
  std::size_t m = blocks();
  std::size_t d = block_size();
  std::vector<Point> images(m * d);
  for (std::size_t i = 0; i < m; ++i) {
    for (Point x = 0; x < d; ++x)
      images[i * d + x] = static_cast<Point>(top[static_cast<Point>(i)] * d + components[i][x]);
  }
  return Permutation(std::move(images));
}

bool WreathElement::is_identity() const
{
  if (!top.is_identity())
    return false;
  for (auto const &c : components) {
    if (!c.is_identity())
      return false;
  }
  return true;
}

WreathElement WreathElement::base(std::vector<Permutation> components)
{
  std::size_t m = components.size();
  return {std::move(components), Permutation(m)};
}

WreathElement parse_wreath(std::string const &text, std::size_t d, std::size_t m)
{
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("wreath element '" + text +
                                "' needs the form 'c_1;...;c_m|top'");

  WreathElement w;
  std::string parts = text.substr(0, bar);
  std::size_t start = 0;
  for (;;) {
    auto semi = parts.find(';', start);
    w.components.push_back(parse_cycles(parts.substr(start, semi - start), d));
    if (semi == std::string::npos)
      break;
    start = semi + 1;
  }
  if (w.components.size() != m)
    throw std::invalid_argument("wreath element '" + text + "' has " +
                                std::to_string(w.components.size()) +
                                " components, expected " + std::to_string(m));
  w.top = parse_cycles(text.substr(bar + 1), m);
  return w;
}

std::string to_string(WreathElement const &w)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < w.components.size(); ++i)
    os << (i ? ";" : "") << to_cycle_string(w.components[i]);
  os << '|' << to_cycle_string(w.top);
  return os.str();
}

namespace {

void check_normalizes(WreathElement const &w, GroupHandle const &socle, char const *name)
{
  for (auto const &c : w.components) {
    if (c.degree() != socle.degree())
      throw std::invalid_argument(std::string(name) + " component degree does not match S");
    for (auto const &s : socle.generators()) {
      if (!socle.contains(s.conjugate(c)))
        throw std::invalid_argument(std::string(name) + " component " + to_cycle_string(c) +
                                    " does not normalize S");
    }
  }
}

struct Tally {
  std::uint64_t insoluble = 0;
  std::vector<Permutation> witnesses;
};

} // namespace

InsolubilityReport wreath_pins_montecarlo(WreathElement const &a, WreathElement const &b,
                                          GroupHandle const &socle, std::size_t m,
                                          SamplingOptions const &options)
{
  if (a.blocks() != m || b.blocks() != m || a.components.size() != m ||
      b.components.size() != m)
    throw std::invalid_argument("wreath elements must have m components");
  check_normalizes(a, socle, "a");
  check_normalizes(b, socle, "b");
  if (a.is_identity())
    throw std::invalid_argument("a must not be the identity");
  if (options.samples < 100)
    throw std::invalid_argument("Monte Carlo mode needs at least 100 samples");

  Permutation a_perm = a.to_permutation();
  Permutation b_perm = b.to_permutation();
  socle.bsgs();

  unsigned workers = options.workers ? options.workers : default_workers();
  auto parts = parallel_chunks<Tally>(
    options.samples, 64, workers, [&](std::uint64_t begin, std::uint64_t end) {
      Tally t;
      for (std::uint64_t i = begin; i < end; ++i) {
        SplitMix64 rng(stream_seed(options.seed, i));
        std::vector<Permutation> xs;
        xs.reserve(m);
        for (std::size_t j = 0; j < m; ++j)
          xs.push_back(socle.random_element(rng));
        Permutation x = WreathElement::base(std::move(xs)).to_permutation();

        std::vector<Permutation> gens{a_perm, x * b_perm};
        if (!soluble(gens)) {
          ++t.insoluble;
          if (t.witnesses.size() < 3)
            t.witnesses.push_back(x);
        }
      }
      return t;
    });

  InsolubilityReport report;
  report.kind = ReportKind::montecarlo;
  report.samples = options.samples;
  report.seed = options.seed;
  for (auto const &t : parts) {
    report.count_insoluble += t.insoluble;
    for (auto const &w : t.witnesses) {
      if (report.witnesses.size() < 3)
        report.witnesses.push_back(w);
    }
  }
  report.p_ins_estimate = wilson_interval(report.count_insoluble, options.samples,
                                          options.confidence);
  return report;
}

} // namespace solab
