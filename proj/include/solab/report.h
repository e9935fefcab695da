#pragma once

/**
 * @file report.h
 * @brief JSON and CSV forms of the library's results.
 *
 * Exact quantities are written as "p/q" strings and big integers as decimal
 * strings, so nothing exact passes through a double.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "solab/analysis.h"
#include "solab/combinatorics.h"
#include "solab/field.h"
#include "solab/insolubility.h"
#include "solab/numeric.h"
#include "solab/perm.h"
#include "solab/solubilizer.h"
#include "solab/stats.h"

namespace solab {

using Json = nlohmann::ordered_json;

Json to_json(Rational const &r);
Json to_json(BigInt const &n);

/// {"degree": n, "cycles": "(1 2)(3 4 5)"}
Json to_json(Permutation const &p);
Permutation permutation_from_json(Json const &j);

Json to_json(SolubilityCertificate const &c);
Json to_json(Estimate const &e);
Json to_json(InsolubilityReport const &r);
Json to_json(EtaResult const &r);
Json to_json(SolubilizerReport const &r);
Json to_json(CrucialResult const &r);
Json to_json(CcentResult const &r);
Json to_json(IdentityCheck const &c);
Json to_json(IotaCount const &c);
Json to_json(KappaCount const &c);
Json to_json(FacileCount const &c);
Json to_json(LambdaRate const &r);
Json to_json(NontransitivityRate const &r);
Json to_json(FpaglResult const &r);

std::string cycle_type_string(std::vector<std::size_t> const &type);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// RFC 4180 quoting for fields with commas, quotes or newlines.
  std::string render() const;
};

} // namespace solab
