#include "solab/report.h"

#include <sstream>
#include <stdexcept>

namespace solab {

namespace {

char const *coset_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

Json permutations(std::vector<Permutation> const &ps)
{
  Json out = Json::array();
  for (auto const &p : ps)
    out.push_back(to_json(p));
  return out;
}

} // namespace

Json to_json(Rational const &r) { return to_fraction_string(r); }

Json to_json(BigInt const &n) { return n.str(); }

Json to_json(Permutation const &p)
{
  return {{"degree", p.degree()}, {"cycles", to_cycle_string(p)}};
}

Permutation permutation_from_json(Json const &j)
{
  if (!j.is_object() || !j.contains("degree") || !j.contains("cycles"))
    throw std::invalid_argument("a permutation record needs \"degree\" and \"cycles\"");
  return parse_cycles(j.at("cycles").get<std::string>(), j.at("degree").get<std::size_t>());
}

Json to_json(SolubilityCertificate const &c)
{
  Json orders = Json::array();
  for (auto const &o : c.derived_orders)
    orders.push_back(to_json(o));
  return {{"verdict", c.verdict == Verdict::soluble ? "soluble" : "insoluble"},
          {"derived_orders", orders},
          {"steps", c.steps}};
}

Json to_json(Estimate const &e)
{
  return {{"estimate", e.estimate}, {"half_width", e.half_width}, {"low", e.low},
          {"high", e.high},         {"confidence", e.confidence}, {"successes", e.successes},
          {"trials", e.trials}};
}

Json to_json(InsolubilityReport const &r)
{
  Json j;
  if (r.kind == ReportKind::exact) {
    j["mode"] = "exact";
    j["population"] = r.population;
    j["count_insoluble"] = r.count_insoluble;
    j["count_contains_socle"] = r.count_contains_socle;
    j["p_ins"] = to_json(r.p_ins);
    j["q"] = r.q_value ? to_json(*r.q_value) : Json(nullptr);
  } else {
    j["mode"] = "montecarlo";
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["p_ins"] = to_json(r.p_ins_estimate);
    j["q"] = r.q_estimate ? to_json(*r.q_estimate) : Json(nullptr);
  }
  j["witnesses"] = permutations(r.witnesses);
  j["flags"] = r.flags;
  return j;
}

Json to_json(EtaResult const &r)
{
  Json rows = Json::array();
  for (auto const &e : r.table)
    rows.push_back({{"cycle_type", cycle_type_string(e.cycle_type)},
                    {"a", to_json(e.a)},
                    {"coset", coset_name(e.coset)},
                    {"p_ins", to_json(e.p_ins)},
                    {"q", to_json(e.q_value)}});
  return {{"n", r.n}, {"eta", to_json(r.eta)}, {"argmin", r.argmin},
          {"table", rows}, {"flags", r.flags}};
}

Json to_json(SolubilizerReport const &r)
{
  Json j{{"group_order", to_json(r.group_order)},
         {"g", to_json(r.g)},
         {"solubilizer_size", r.solubilizer_size},
         {"ratio", to_json(r.ratio)}};
  if (r.t_bound_used)
    j["t"] = *r.t_bound_used;
  if (r.eta_tilde)
    j["eta_tilde"] = to_json(*r.eta_tilde);
  return j;
}

Json to_json(CrucialResult const &r)
{
  return {{"t", r.t},
          {"eta_tilde", to_json(r.eta_tilde)},
          {"ratio", to_json(r.ratio)},
          {"bound", to_json(r.bound)},
          {"holds", r.holds},
          {"solubilizer", to_json(r.solubilizer)}};
}

Json to_json(CcentResult const &r)
{
  Json steps = Json::array();
  for (auto const &s : r.steps)
    steps.push_back({{"derived_condition", s.derived_condition},
                     {"centralizer_condition", s.centralizer_condition}});
  Json j{{"hypothesis_holds", r.hypothesis_holds},
         {"failing_step", r.failing_step ? Json(*r.failing_step) : Json(nullptr)},
         {"steps", steps}};
  if (r.hypothesis_holds)
    j["ambient_soluble"] = r.ambient_soluble;
  return j;
}

Json to_json(IdentityCheck const &c)
{
  return {{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"equal", c.equal}};
}

Json to_json(IotaCount const &c)
{
  return {{"omega_size", c.omega_size}, {"a_size", c.a_size}, {"total", c.total},
          {"even", c.even},             {"odd", c.odd}};
}

Json to_json(KappaCount const &c)
{
  return {{"exhaustive", c.exhaustive}, {"closed_form", to_json(c.closed_form)}};
}

Json to_json(FacileCount const &c)
{
  return {{"n", c.n},
          {"k", c.k},
          {"exact", c.exact},
          {"closed_form", to_json(c.closed_form)},
          {"printed_form", to_json(c.printed_form)},
          {"bound", to_json(c.bound)},
          {"matches_closed_form", c.matches_closed_form},
          {"meets_bound", c.meets_bound}};
}

Json to_json(LambdaRate const &r)
{
  return {{"n", r.n},
          {"estimate", to_json(r.estimate)},
          {"exact", to_json(r.exact)},
          {"admissible", r.admissible},
          {"bound", r.bound}};
}

Json to_json(NontransitivityRate const &r)
{
  return {{"estimate", to_json(r.estimate)},
          {"exact", r.exact ? to_json(*r.exact) : Json(nullptr)},
          {"fixed", r.fixed},
          {"reference", r.reference},
          {"slack", r.slack}};
}

Json to_json(FpaglResult const &r)
{
  return {{"q", r.q},
          {"max_fix", r.max_fix},
          {"max_fix_affine", r.max_fix_affine},
          {"sqrt_q", r.sqrt_q},
          {"pass", r.pass},
          {"witness", {{"frob", r.witness.frob}, {"mult", r.witness.mult},
                       {"shift", r.witness.shift}}}};
}

std::string cycle_type_string(std::vector<std::size_t> const &type)
{
  std::string s = "[";
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i)
      s += ' ';
    s += std::to_string(type[i]);
  }
  return s + "]";
}

std::string CsvTable::render() const
{
  auto field = [](std::string const &f) {
    if (f.find_first_of(",\"\n") == std::string::npos)
      return f;
    std::string q = "\"";
    for (char c : f) {
      if (c == '"')
        q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream out;
  auto line = [&](std::vector<std::string> const &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      out << (i ? "," : "") << field(cells[i]);
    out << '\n';
  };
  line(header);
  for (auto const &r : rows)
    line(r);
  return out.str();
}

} // namespace solab
