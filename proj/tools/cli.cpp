#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cs/core.hpp"
#include "cs/format.hpp"
#include "cs/operators.hpp"
#include "cs/report.hpp"
#include "cs/scans.hpp"
#include "cs/weights.hpp"

namespace {

double parse_scalar(const std::string& text) {
  std::size_t consumed = 0;
  const double v = std::stod(text, &consumed);
  if (consumed != text.size()) {
    throw std::invalid_argument("bad real value '" + text + "'");
  }
  return v;
}

cs::SimplexPoint parse_point(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("point must be x1,x2");
  }
  return cs::SimplexPoint(parse_scalar(text.substr(0, comma)),
                          parse_scalar(text.substr(comma + 1)));
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(',', pos);
    const std::string part =
        text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    out.push_back(parse_scalar(part));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const double v : parse_real_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

int emit_report(const cs::VerificationReport& rep) {
  std::cout << rep.to_json() << "\n";
  return rep.passed ? 0 : 1;
}

struct WeightsArgs {
  int n = 1;
  double beta = 0.0;
  std::string x;
  bool univariate = false;
  std::string format = "csv";
};

int run_weights(const WeightsArgs& a) {
  const cs::OperatorParams params(a.n, a.beta);
  if (a.univariate) {
    const cs::UnivariateWeights wt = cs::univariate_weights(params, parse_scalar(a.x));
    if (a.format == "csv") {
      std::cout << wt.to_csv();
      return 0;
    }
    nlohmann::ordered_json j;
    j["kind"] = "univariate";
    j["n"] = params.n;
    j["beta"] = params.beta;
    j["x"] = wt.x;
    auto entries = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < wt.w.size(); ++k) {
      entries.push_back({{"k", k}, {"weight", wt.w[k]}});
    }
    j["entries"] = std::move(entries);
    std::cout << j.dump() << "\n";
    return 0;
  }

  const cs::BivariateWeights wt = cs::bivariate_weights(params, parse_point(a.x));
  if (a.format == "csv") {
    std::cout << wt.to_csv();
    return 0;
  }
  nlohmann::ordered_json j;
  j["kind"] = "bivariate";
  j["n"] = params.n;
  j["beta"] = params.beta;
  j["x"] = {wt.x.x1(), wt.x.x2()};
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < wt.w.size(); ++i) {
    entries.push_back(
        {{"k1", wt.lattice[i].k1}, {"k2", wt.lattice[i].k2}, {"weight", wt.w[i]}});
  }
  j["entries"] = std::move(entries);
  std::cout << j.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cheney-Sharma operators on the unit simplex: evaluation, weight tables, "
               "identity scans, convergence tables"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "worker threads for scans (0 = auto, 1 = serial)");

  // weights
  WeightsArgs wa;
  auto* weights_cmd = app.add_subcommand("weights", "print a basis weight table");
  weights_cmd->add_option("--n", wa.n, "degree")->required();
  weights_cmd->add_option("--beta", wa.beta, "basis parameter")->required();
  weights_cmd->add_option("--x", wa.x, "evaluation point: x1,x2 (or x with --univariate)")
      ->required();
  weights_cmd->add_flag("--univariate", wa.univariate, "univariate table on [0,1]");
  weights_cmd->add_option("--format", wa.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // eval
  std::string ev_op = "G";
  std::string ev_f;
  int ev_n = 1;
  double ev_beta = 0.0;
  std::string ev_x;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an operator at a point");
  eval_cmd->add_option("--op", ev_op, "Q or G")->check(CLI::IsMember({"Q", "G"}));
  eval_cmd->add_option("--f", ev_f, "function descriptor")->required();
  eval_cmd->add_option("--n", ev_n, "degree")->required();
  eval_cmd->add_option("--beta", ev_beta, "basis parameter")->required();
  eval_cmd->add_option("--x", ev_x, "point: x1,x2 for G, x for Q")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a randomized identity/property scan");
  verify_cmd->require_subcommand(1);

  // Shared flags never carry conflicting defaults; trials and tolerance are
  // per-subcommand so each keeps its own default.
  int v_n = 10;
  double v_beta = 0.0;
  std::uint64_t v_seed = 0;
  std::string v_f;
  double v_mu = 1.0;
  double v_M = 1.0;
  int v_mmax = 30;
  std::string v_betalist = "0,0.05,0.3,1";

  int aj_trials = 1000;
  double aj_tol = 1e-11;
  auto* aj = verify_cmd->add_subcommand("abel-jensen", "direct two-sided expansion residual");
  aj->add_option("--m-max", v_mmax, "largest expansion degree")->capture_default_str();
  aj->add_option("--trials", aj_trials, "random (u,v) pairs")->capture_default_str();
  aj->add_option("--seed", v_seed, "RNG seed");
  aj->add_option("--tol", aj_tol, "tolerance")->capture_default_str();
  aj->add_option("--beta-list", v_betalist, "comma-separated betas")->capture_default_str();

  int part_trials = 100;
  double part_tol = 1e-12;
  auto* part = verify_cmd->add_subcommand("partition", "weight sums and nonnegativity");
  part->add_option("--n", v_n, "degree")->required();
  part->add_option("--beta", v_beta, "basis parameter")->required();
  part->add_option("--trials", part_trials, "random points")->capture_default_str();
  part->add_option("--seed", v_seed, "RNG seed");
  part->add_option("--tol", part_tol, "tolerance")->capture_default_str();

  int b0_trials = 100;
  double b0_tol = 1e-12;
  auto* b0 = verify_cmd->add_subcommand("bernstein0", "beta = 0 against the Bernstein oracle");
  b0->add_option("--n", v_n, "degree")->required();
  b0->add_option("--f", v_f, "single descriptor (default: whole corpus)");
  b0->add_option("--trials", b0_trials, "random points")->capture_default_str();
  b0->add_option("--seed", v_seed, "RNG seed");
  b0->add_option("--tol", b0_tol, "tolerance")->capture_default_str();

  int diff_trials = 200;
  double diff_tol = 1e-10;
  auto* diff = verify_cmd->add_subcommand("difference", "expanded G(f;y)-G(f;x) identity");
  diff->add_option("--n", v_n, "degree")->required();
  diff->add_option("--beta", v_beta, "basis parameter")->required();
  diff->add_option("--f", v_f, "single descriptor (default: whole corpus)");
  diff->add_option("--trials", diff_trials, "random ordered pairs")->capture_default_str();
  diff->add_option("--seed", v_seed, "RNG seed");
  diff->add_option("--tol", diff_tol, "tolerance")->capture_default_str();

  int marg_trials = 100;
  double marg_tol = 1e-11;
  auto* marg = verify_cmd->add_subcommand("marginal", "marginal collapse onto the axes");
  marg->add_option("--n", v_n, "degree")->required();
  marg->add_option("--beta", v_beta, "basis parameter")->required();
  marg->add_option("--trials", marg_trials, "random points")->capture_default_str();
  marg->add_option("--seed", v_seed, "RNG seed");
  marg->add_option("--tol", marg_tol, "tolerance")->capture_default_str();

  int lip_trials = 10000;
  double lip_tol = 1e-9;
  auto* lip = verify_cmd->add_subcommand("lipschitz", "Lipschitz class preservation");
  lip->add_option("--f", v_f, "function descriptor")->required();
  lip->add_option("--mu", v_mu, "order in (0,1]")->required();
  lip->add_option("--M", v_M, "declared constant")->required();
  lip->add_option("--n", v_n, "degree")->required();
  lip->add_option("--beta", v_beta, "basis parameter")->required();
  lip->add_option("--trials", lip_trials, "random pairs")->capture_default_str();
  lip->add_option("--seed", v_seed, "RNG seed");
  lip->add_option("--tol", lip_tol, "tolerance")->capture_default_str();

  int mod_trials = 10000;
  double mod_tol = 1e-10;
  auto* mod = verify_cmd->add_subcommand("modulus", "modulus-of-continuity axioms");
  mod->add_option("--f", v_f, "modulus descriptor")->required();
  mod->add_option("--n", v_n, "degree")->required();
  mod->add_option("--beta", v_beta, "basis parameter")->required();
  mod->add_option("--trials", mod_trials, "random samples")->capture_default_str();
  mod->add_option("--seed", v_seed, "RNG seed");
  mod->add_option("--tol", mod_tol, "tolerance")->capture_default_str();

  // table
  std::string t_f;
  std::string t_nlist;
  std::string t_schedule;
  int t_grid = 50;
  auto* table_cmd = app.add_subcommand("table", "empirical sup-error convergence table");
  table_cmd->add_option("--f", t_f, "function descriptor")->required();
  table_cmd->add_option("--n-list", t_nlist, "comma-separated degrees")->required();
  table_cmd->add_option("--beta-schedule", t_schedule, "const:<b>, decay:<c> or decay2:<c>")
      ->required();
  table_cmd->add_option("--grid", t_grid, "triangular grid resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*weights_cmd) return run_weights(wa);

    if (*eval_cmd) {
      const cs::FunctionDescriptor f = cs::FunctionDescriptor::parse(ev_f);
      const cs::OperatorParams params(ev_n, ev_beta);
      double value = 0.0;
      if (ev_op == "Q") {
        value = cs::evaluate({f, params, parse_scalar(ev_x)});
      } else {
        value = cs::evaluate({f, params, parse_point(ev_x)});
      }
      std::cout << cs::format_sig17(value) << "\n";
      return 0;
    }

    if (*aj) {
      return emit_report(cs::verify_abel_jensen(v_mmax, aj_trials, parse_real_list(v_betalist),
                                                v_seed, aj_tol, threads));
    }
    if (*part) {
      return emit_report(cs::verify_partition(cs::OperatorParams(v_n, v_beta), part_trials,
                                              v_seed, part_tol, threads));
    }
    if (*b0) {
      const std::vector<cs::FunctionDescriptor> fs =
          v_f.empty() ? cs::standard_corpus()
                      : std::vector<cs::FunctionDescriptor>{cs::FunctionDescriptor::parse(v_f)};
      return emit_report(cs::verify_bernstein0(fs, v_n, b0_trials, v_seed, b0_tol, threads));
    }
    if (*diff) {
      const std::vector<cs::FunctionDescriptor> fs =
          v_f.empty() ? cs::standard_corpus()
                      : std::vector<cs::FunctionDescriptor>{cs::FunctionDescriptor::parse(v_f)};
      return emit_report(cs::verify_difference(fs, cs::OperatorParams(v_n, v_beta), diff_trials,
                                               v_seed, diff_tol, threads));
    }
    if (*marg) {
      return emit_report(cs::verify_marginal(cs::OperatorParams(v_n, v_beta), marg_trials,
                                             v_seed, marg_tol, threads));
    }
    if (*lip) {
      return emit_report(cs::verify_lipschitz_preservation(
          cs::FunctionDescriptor::parse(v_f), cs::LipschitzSpec(v_mu, v_M),
          cs::OperatorParams(v_n, v_beta), lip_trials, v_seed, lip_tol, threads));
    }
    if (*mod) {
      return emit_report(cs::verify_modulus_axioms(cs::FunctionDescriptor::parse(v_f),
                                                   cs::OperatorParams(v_n, v_beta), mod_trials,
                                                   v_seed, mod_tol, threads));
    }

    if (*table_cmd) {
      const cs::ConvergenceTable table =
          cs::convergence_table(cs::FunctionDescriptor::parse(t_f), parse_int_list(t_nlist),
                                cs::BetaSchedule::parse(t_schedule), t_grid, threads);
      std::cout << table.to_csv();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
