#include "wigwitness/io.hpp"

#include <ostream>

namespace wigwitness {

Json fock_operator_to_json(const FockOperator& rho) {
  Json mat = Json::array();
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
      mat.push_back({rho.mat(i, j).real(), rho.mat(i, j).imag()});
    }
  }
  return Json{{"dim", rho.dim()}, {"mat", std::move(mat)}};
}

FockOperator fock_operator_from_json(const Json& j) {
  const auto dim = j.at("dim").get<Eigen::Index>();
  const auto& mat = j.at("mat");
  if (static_cast<Eigen::Index>(mat.size()) != dim * dim) {
    throw std::invalid_argument("fock_operator_from_json: mat size mismatch");
  }
  Matrix m(dim, dim);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index jj = 0; jj < dim; ++jj, ++k) {
      m(i, jj) = Complex(mat[k][0].get<double>(), mat[k][1].get<double>());
    }
  }
  return FockOperator(std::move(m));
}

Json mixture_to_json(const GaussianMixture& mix) {
  Json weights = Json::array();
  Json alphas = Json::array();
  Json xis = Json::array();
  for (const auto& c : mix.components) {
    weights.push_back(c.weight);
    alphas.push_back({c.params.alpha.real(), c.params.alpha.imag()});
    xis.push_back({c.params.xi.real(), c.params.xi.imag()});
  }
  return Json{{"weights", std::move(weights)},
              {"alphas", std::move(alphas)},
              {"xis", std::move(xis)}};
}

GaussianMixture mixture_from_json(const Json& j) {
  GaussianMixture mix;
  const auto& weights = j.at("weights");
  const auto& alphas = j.at("alphas");
  const auto& xis = j.at("xis");
  if (weights.size() != alphas.size() || weights.size() != xis.size()) {
    throw std::invalid_argument("mixture_from_json: array length mismatch");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    PureGaussianParams p;
    p.alpha = Complex(alphas[i][0].get<double>(), alphas[i][1].get<double>());
    p.xi = Complex(xis[i][0].get<double>(), xis[i][1].get<double>());
    mix.components.push_back({weights[i].get<double>(), p});
  }
  mix.validate();
  return mix;
}

std::string verdict_str(Verdict v) {
  return v == Verdict::QuantumNonGaussian ? "quantum-non-gaussian"
                                          : "inconclusive";
}

Json report_to_json(const WitnessReport& rep) {
  return Json{{"wigner_at_origin", rep.wigner_at_origin},
              {"mean_photon", rep.mean_photon},
              {"bound", rep.bound},
              {"delta", rep.delta},
              {"map", rep.map_used.str()},
              {"verdict", verdict_str(rep.verdict)}};
}

Json oracle_report_to_json(const OracleReport& rep) {
  Json failures = Json::array();
  for (const auto& f : rep.failures) {
    failures.push_back(
        {{"id", f.id}, {"expected", f.expected}, {"got", f.got}});
  }
  return Json{{"checks_run", rep.checks_run},
              {"max_abs_deviation", rep.max_abs_deviation},
              {"failures", std::move(failures)}};
}

Json eps_max_to_json(const EpsMaxResult& res) {
  Json j{{"criterion", res.criterion}, {"map_at_max", res.map_at_max.str()}};
  if (res.eps_max) {
    j["eps_max"] = *res.eps_max;
  } else {
    j["eps_max"] = "none";
  }
  return j;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep,
                     const std::vector<std::string>& provenance) {
  out.precision(17);
  out << "# figure: " << sweep.figure_tag << '\n';
  for (const auto& line : provenance) out << "# " << line << '\n';
  out << "param,eps,W0,nbar,bound,delta,verdict\n";
  for (const auto& section : sweep.sections) {
    if (!section.label.empty()) out << "# " << section.label << '\n';
    for (const auto& row : section.rows) {
      out << row.param << ',' << row.eps << ',' << row.w0 << ',' << row.nbar
          << ',' << row.bound << ',' << row.delta << ',' << row.verdict
          << '\n';
    }
  }
}

}  // namespace wigwitness
