#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "wigwitness/gaussian.hpp"
#include "wigwitness/oracle.hpp"
#include "wigwitness/witness.hpp"

namespace wigwitness {

using Json = nlohmann::json;

/// {dim, mat: [[re, im], ...]} row-major.
Json fock_operator_to_json(const FockOperator& rho);
FockOperator fock_operator_from_json(const Json& j);

/// {weights: [...], alphas: [[re, im], ...], xis: [[re, im], ...]}
Json mixture_to_json(const GaussianMixture& mix);
GaussianMixture mixture_from_json(const Json& j);

Json report_to_json(const WitnessReport& rep);
Json oracle_report_to_json(const OracleReport& rep);
Json eps_max_to_json(const EpsMaxResult& res);

std::string verdict_str(Verdict v);

/// One row of a parameter sweep, matching the CSV schema
/// param,eps,W0,nbar,bound,delta,verdict.
struct SweepRow {
  double param = 0.0;
  double eps = 0.0;
  double w0 = 0.0;
  double nbar = 0.0;
  double bound = 0.0;
  double delta = 0.0;
  std::string verdict;
};

struct SweepResult {
  std::string figure_tag;
  /// Sections keep multi-series figures in one file; the label becomes a
  /// comment line above its rows.
  struct Section {
    std::string label;
    std::vector<SweepRow> rows;
  };
  std::vector<Section> sections;
};

/// `# key: value` provenance headers, then the fixed column schema.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep,
                     const std::vector<std::string>& provenance);

}  // namespace wigwitness
