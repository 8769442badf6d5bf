// wigwit: witness evaluation, figure sweeps, oracle campaigns and state export
// for the Wigner-function non-Gaussianity witness library.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wigwitness/channels.hpp"
#include "wigwitness/exemplars.hpp"
#include "wigwitness/io.hpp"
#include "wigwitness/oracle.hpp"
#include "wigwitness/parallel.hpp"
#include "wigwitness/witness.hpp"

namespace {

using namespace wigwitness;

constexpr const char* kVersion = "wigwit 1.0.0";

struct ParsedState {
  std::optional<StateFamily> family;  // empty for @file states
  double param = 0.0;
  FockOperator rho;  // set for @file states only
};

ParsedState parse_state_spec(const std::string& spec, const Tolerances& tol) {
  ParsedState st;
  if (!spec.empty() && spec.front() == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw std::invalid_argument("cannot open state file " + spec.substr(1));
    Json j;
    in >> j;
    st.rho = fock_operator_from_json(j);
    require_state(st.rho, tol);
    return st;
  }
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("state spec must be fock:m, pac:alpha, pss:r or @file");
  }
  const std::string kind = spec.substr(0, colon);
  const double param = std::stod(spec.substr(colon + 1));
  if (kind == "fock") {
    if (param < 0 || std::abs(param - std::lround(param)) > 1e-12) {
      throw std::invalid_argument("fock state needs a photon number");
    }
    st.family = StateFamily::Fock;
  } else if (kind == "pac") {
    st.family = StateFamily::Pac;
  } else if (kind == "pss") {
    st.family = StateFamily::Pss;
  } else {
    throw std::invalid_argument("unknown state family '" + kind + "'");
  }
  st.param = param;
  return st;
}

double family_energy(StateFamily family, double param) {
  switch (family) {
    case StateFamily::Fock:
      return param;
    case StateFamily::Pac:
      return pac_mean_photon({param});
    case StateFamily::Pss:
      return pss_mean_photon({param});
  }
  throw std::logic_error("family_energy: unknown family");
}

FockOperator build_family_state(StateFamily family, double param, int dim,
                                const Tolerances& tol) {
  switch (family) {
    case StateFamily::Fock:
      return density(fock_state(static_cast<int>(std::lround(param)), dim));
    case StateFamily::Pac:
      return pac_to_fock({param}, dim, tol);
    case StateFamily::Pss:
      return pss_to_fock({param}, dim, tol);
  }
  throw std::logic_error("build_family_state: unknown family");
}

/// Truncation dimension for a family state pushed through the map steps:
/// track the worst-case amplitude growth, plus geometric-tail headroom for
/// any squeezing in the state or the map.
int dim_for_mapped_state(StateFamily family, double param,
                         const GaussianMapSpec& map) {
  const double n0 = family_energy(family, param);
  double amp = std::sqrt(n0);
  double total_squeeze = family == StateFamily::Pss ? param : 0.0;
  for (const auto& step : map.steps) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, GaussianMapSpec::Displacement>) {
            amp += std::abs(s.beta);
          } else if constexpr (std::is_same_v<T, GaussianMapSpec::Squeezing>) {
            amp = std::exp(std::abs(s.s)) * (amp + 1.0);
            total_squeeze += std::abs(s.s);
          } else {
            amp *= std::sqrt(1.0 - s.epsilon);
          }
        },
        step);
  }
  return dim_for_energy(std::max(n0, amp * amp)) +
         squeezing_tail_levels(total_squeeze);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

// ---------------------------------------------------------------------------
// witness

enum class AutoMap { None, Displacement, Squeezing };

int cmd_witness(const std::string& state_spec,
                const std::vector<std::string>& map_tokens, int dim_override,
                const Tolerances& tol, const std::string& out_path) {
  AutoMap auto_map = AutoMap::None;
  GaussianMapSpec prefix;
  for (std::size_t i = 0; i < map_tokens.size(); ++i) {
    const std::string& tok = map_tokens[i];
    if (tok == "disp:auto" || tok == "sq:auto") {
      if (i + 1 != map_tokens.size()) {
        throw std::invalid_argument("an auto map must be the last token");
      }
      auto_map = tok == "disp:auto" ? AutoMap::Displacement : AutoMap::Squeezing;
      break;
    }
    prefix = prefix.then(GaussianMapSpec::parse(tok));
  }

  const ParsedState st = parse_state_spec(state_spec, tol);
  FockOperator rho;
  if (st.family) {
    const int dim = dim_override > 0
                        ? dim_override
                        : dim_for_mapped_state(*st.family, st.param, prefix);
    rho = build_family_state(*st.family, st.param, dim, tol);
  } else {
    rho = st.rho;
  }

  const FockOperator mapped = apply_gaussian_map(rho, prefix);
  WitnessReport rep;
  switch (auto_map) {
    case AutoMap::None:
      rep = delta1(mapped);
      rep.map_used = prefix;
      break;
    case AutoMap::Displacement: {
      const double box = 2.0 * std::sqrt(mean_photon(mapped)) + 2.0;
      const DisplacementOpt opt = optimize_displacement(mapped, -box, box);
      rep = opt.report;
      rep.map_used = prefix.then(GaussianMapSpec::displacement(opt.beta));
      break;
    }
    case AutoMap::Squeezing: {
      const SqueezeMapOpt opt = optimize_squeezing(mapped);
      rep = opt.report;
      rep.map_used = prefix.then(GaussianMapSpec::squeezing(opt.s));
      break;
    }
  }
  emit(report_to_json(rep).dump(2) + "\n", out_path);
  return rep.verdict == Verdict::QuantumNonGaussian ? 0 : 1;
}

// ---------------------------------------------------------------------------
// state dump

int cmd_state_dump(const std::string& state_spec,
                   const std::vector<std::string>& map_tokens, int dim_override,
                   const Tolerances& tol, const std::string& out_path) {
  GaussianMapSpec map;
  for (const auto& tok : map_tokens) map = map.then(GaussianMapSpec::parse(tok));

  const ParsedState st = parse_state_spec(state_spec, tol);
  FockOperator rho;
  if (st.family) {
    const int dim = dim_override > 0
                        ? dim_override
                        : dim_for_mapped_state(*st.family, st.param, map);
    rho = build_family_state(*st.family, st.param, dim, tol);
  } else {
    rho = st.rho;
  }
  emit(fock_operator_to_json(apply_gaussian_map(rho, map)).dump(2) + "\n",
       out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

std::vector<double> make_grid(double lo, double hi, double step) {
  if (step <= 0 || hi < lo) throw std::invalid_argument("bad grid lo:hi:step");
  const int n = static_cast<int>(std::llround((hi - lo) / step));
  std::vector<double> g(n + 1);
  for (int i = 0; i <= n; ++i) g[i] = lo + i * step;
  return g;
}

std::vector<double> parse_range(const std::string& text) {
  std::stringstream ss(text);
  std::string part;
  std::vector<double> v;
  while (std::getline(ss, part, ':')) v.push_back(std::stod(part));
  if (v.size() != 3) throw std::invalid_argument("range must be lo:hi:step");
  return make_grid(v[0], v[1], v[2]);
}

SweepRow row_from_report(double param, double eps, const WitnessReport& rep) {
  return {param,     eps,       rep.wigner_at_origin,
          rep.mean_photon, rep.bound, rep.delta,
          verdict_str(rep.verdict)};
}

std::string fmt_param(const char* name, double value) {
  std::ostringstream s;
  s << name << '=' << value;
  return s.str();
}

/// Delta vs eps for one family, one section per family parameter.
SweepResult delta_vs_eps(const std::string& tag, StateFamily family,
                         const char* pname, const std::vector<double>& params,
                         int criterion) {
  const std::vector<double> eps = make_grid(0.0, 1.0, 0.005);
  SweepResult sweep;
  sweep.figure_tag = tag;
  for (double p : params) {
    SweepResult::Section sec;
    sec.label = fmt_param(pname, p);
    sec.rows.resize(eps.size());
    parallel_for(eps.size(), [&](std::size_t i) {
      sec.rows[i] =
          row_from_report(p, eps[i], lossy_report(family, p, eps[i], criterion));
    });
    sweep.sections.push_back(std::move(sec));
  }
  return sweep;
}

/// eps_max vs family parameter; the eps column carries the threshold.
SweepResult epsmax_vs_param(const std::string& tag, StateFamily family,
                            const std::vector<double>& params, int criterion,
                            double eps_grid, const std::string& label) {
  SweepResult sweep;
  sweep.figure_tag = tag;
  SweepResult::Section sec;
  sec.label = label;
  sec.rows.resize(params.size());
  parallel_for(params.size(), [&](std::size_t i) {
    const EpsMaxResult res = eps_max(family, params[i], criterion, eps_grid);
    const double e = res.eps_max.value_or(0.0);
    sec.rows[i] =
        row_from_report(params[i], e, lossy_report(family, params[i], e, criterion));
  });
  sweep.sections.push_back(std::move(sec));
  return sweep;
}

/// Delta_pac(beta) at fixed loss, one section per alpha.
SweepResult pac_beta_sweep(const std::string& tag, double eps) {
  const std::vector<double> betas = make_grid(-2.0, 1.0, 0.01);
  SweepResult sweep;
  sweep.figure_tag = tag;
  for (double alpha : {0.2, 0.4, 0.6}) {
    SweepResult::Section sec;
    sec.label = fmt_param("alpha", alpha);
    sec.rows.resize(betas.size());
    parallel_for(betas.size(), [&](std::size_t i) {
      sec.rows[i] = row_from_report(
          betas[i], eps,
          pac_displaced_report(alpha, eps, Complex(betas[i], 0.0)));
    });
    sweep.sections.push_back(std::move(sec));
  }
  return sweep;
}

/// Delta_pss(s) at fixed loss, one section per r.
SweepResult pss_s_sweep(const std::string& tag, double eps) {
  const std::vector<double> ss = make_grid(-1.5, 0.5, 0.005);
  SweepResult sweep;
  sweep.figure_tag = tag;
  for (double r : {0.1, 0.3, 0.5}) {
    SweepResult::Section sec;
    sec.label = fmt_param("r", r);
    sec.rows.resize(ss.size());
    parallel_for(ss.size(), [&](std::size_t i) {
      sec.rows[i] = row_from_report(ss[i], eps, pss_squeezed_report(r, eps, ss[i]));
    });
    sweep.sections.push_back(std::move(sec));
  }
  return sweep;
}

SweepResult build_sweep(const std::string& tag, const std::string& family_name,
                        const std::string& range_text, int criterion,
                        double eps_grid) {
  if (tag == "fig2-left") {
    return delta_vs_eps(tag, StateFamily::Fock, "m", {1, 2, 3}, 1);
  }
  if (tag == "fig2-right") {
    return epsmax_vs_param(tag, StateFamily::Fock,
                           {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 1, eps_grid,
                           "criterion=1");
  }
  if (tag == "fig3-left") {
    return delta_vs_eps(tag, StateFamily::Pac, "alpha", {0.2, 0.4, 0.6}, 1);
  }
  if (tag == "fig3-right") {
    return epsmax_vs_param(tag, StateFamily::Pac, make_grid(0.1, 3.0, 0.1), 1,
                           eps_grid, "criterion=1");
  }
  if (tag == "fig4-left") {
    return delta_vs_eps(tag, StateFamily::Pss, "r", {0.1, 0.3, 0.5}, 1);
  }
  if (tag == "fig4-right") {
    return epsmax_vs_param(tag, StateFamily::Pss, make_grid(0.05, 1.5, 0.05), 1,
                           eps_grid, "criterion=1");
  }
  if (tag == "fig7-left") return pac_beta_sweep(tag, 0.8);
  if (tag == "fig7-right") {
    return delta_vs_eps(tag, StateFamily::Pac, "alpha", {0.2, 0.4, 0.6}, 2);
  }
  if (tag == "fig8-left") return pss_s_sweep(tag, 0.7);
  if (tag == "fig8-right") {
    return delta_vs_eps(tag, StateFamily::Pss, "r", {0.1, 0.3, 0.5}, 2);
  }
  if (tag == "fig9") {
    SweepResult sweep;
    sweep.figure_tag = tag;
    const std::vector<double> rs = make_grid(0.05, 1.5, 0.05);
    for (int crit : {1, 2}) {
      SweepResult res = epsmax_vs_param(tag, StateFamily::Pss, rs, crit,
                                        eps_grid, fmt_param("criterion", crit));
      sweep.sections.push_back(std::move(res.sections.front()));
    }
    return sweep;
  }
  if (tag == "custom") {
    if (family_name.empty() || range_text.empty()) {
      throw std::invalid_argument("custom sweep needs --family and --range");
    }
    StateFamily family;
    if (family_name == "fock") {
      family = StateFamily::Fock;
    } else if (family_name == "pac") {
      family = StateFamily::Pac;
    } else if (family_name == "pss") {
      family = StateFamily::Pss;
    } else {
      throw std::invalid_argument("unknown family '" + family_name + "'");
    }
    return epsmax_vs_param(tag, family, parse_range(range_text), criterion,
                           eps_grid, fmt_param("criterion", criterion));
  }
  throw std::invalid_argument("unknown figure tag '" + tag + "'");
}

int cmd_sweep(const std::string& tag, const std::string& family_name,
              const std::string& range_text, int criterion, double eps_grid,
              const std::string& out_path, const std::string& cmdline) {
  const SweepResult sweep =
      build_sweep(tag, family_name, range_text, criterion, eps_grid);
  std::ostringstream csv;
  write_sweep_csv(csv, sweep,
                  {"command: " + cmdline, std::string("version: ") + kVersion,
                   "decision_tol: 1e-9", "eps_grid: " + std::to_string(eps_grid)});
  emit(csv.str(), out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// oracle

int cmd_oracle_report(const OracleReport& rep, const std::string& out_path) {
  emit(oracle_report_to_json(rep).dump(2) + "\n", out_path);
  return rep.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::ostringstream cmdline;
  for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];

  CLI::App app{"Wigner-function witness of quantum non-Gaussianity"};
  app.require_subcommand(1);

  Tolerances tol;
  int dim_override = 0;
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", dim_override, "truncation dimension override");
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--tol-norm", tol.norm_tol, "state-norm tolerance");
    sub->add_option("--tol-herm", tol.herm_tol, "Hermiticity tolerance");
    sub->add_option("--tol-trace", tol.trace_tol, "trace tolerance");
    sub->add_option("--tol-psd", tol.psd_tol, "positivity tolerance");
    sub->add_option("--tol-trunc", tol.truncation_tol, "truncation tolerance");
  };

  // witness
  std::string state_spec;
  std::vector<std::string> map_tokens;
  CLI::App* witness = app.add_subcommand(
      "witness", "evaluate the witness on a state after optional maps");
  witness->add_option("state", state_spec, "fock:m | pac:alpha | pss:r | @file")
      ->required();
  witness->add_option("maps", map_tokens,
                      "map tokens: loss:eps disp:re[,im] sq:s disp:auto sq:auto");
  add_common(witness);

  // sweep
  std::string tag, family_name, range_text;
  int criterion = 1;
  double eps_grid = 1e-3;
  CLI::App* sweep = app.add_subcommand("sweep", "emit a figure sweep as CSV");
  sweep->add_option("tag", tag, "figure tag (fig2-left .. fig9) or 'custom'")
      ->required();
  sweep->add_option("--family", family_name, "custom sweep family");
  sweep->add_option("--range,--r,--alpha,--m", range_text,
                    "custom sweep grid lo:hi:step");
  sweep->add_option("--criterion", criterion, "witness criterion (1 or 2)");
  sweep->add_option("--eps-grid", eps_grid, "eps_max scan resolution");
  add_common(sweep);

  // oracle
  CLI::App* oracle = app.add_subcommand("oracle", "run validation campaigns");
  oracle->require_subcommand(1);
  long hull_samples = 10000;
  double hull_energy = 4.0;
  int hull_maps = 10;
  std::uint64_t seed = 7;
  CLI::App* hull = oracle->add_subcommand(
      "hull", "sampled Gaussian mixtures must never violate the bound");
  hull->add_option("--samples", hull_samples, "number of sampled states");
  hull->add_option("--max-energy", hull_energy, "energy cap per sample");
  hull->add_option("--maps", hull_maps, "random Gaussian maps per state");
  hull->add_option("--seed", seed, "RNG seed");
  hull->add_option("--out", out_path, "output file (default stdout)");
  std::uint64_t cf_seed = GridSpec{}.seed;
  CLI::App* closed = oracle->add_subcommand(
      "closed-forms", "cross-validate closed forms against the Fock pipeline");
  closed->add_option("--seed", cf_seed, "RNG seed");
  closed->add_option("--out", out_path, "output file (default stdout)");

  // state dump
  std::string dump_spec;
  std::vector<std::string> dump_tokens;
  CLI::App* state = app.add_subcommand("state", "state utilities");
  state->require_subcommand(1);
  CLI::App* dump = state->add_subcommand("dump", "export a state as JSON");
  dump->add_option("state", dump_spec, "fock:m | pac:alpha | pss:r | @file")
      ->required();
  dump->add_option("maps", dump_tokens, "map tokens applied before export");
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (witness->parsed()) {
      return cmd_witness(state_spec, map_tokens, dim_override, tol, out_path);
    }
    if (sweep->parsed()) {
      return cmd_sweep(tag, family_name, range_text, criterion, eps_grid,
                       out_path, cmdline.str());
    }
    if (oracle->parsed()) {
      if (hull->parsed()) {
        return cmd_oracle_report(
            run_hull_campaign(hull_samples, hull_energy, hull_maps, seed),
            out_path);
      }
      GridSpec spec;
      spec.seed = cf_seed;
      return cmd_oracle_report(cross_validate_closed_forms(spec), out_path);
    }
    if (state->parsed()) {
      return cmd_state_dump(dump_spec, dump_tokens, dim_override, tol, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
