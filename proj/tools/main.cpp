// linforest command line: generators, verifiers, exact solvers, the
// randomized pipeline, and the experiment runners, over plain text formats.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "linforest/color_model.hpp"
#include "linforest/exact_oracle.hpp"
#include "linforest/experiments.hpp"
#include "linforest/generators.hpp"
#include "linforest/graph.hpp"
#include "linforest/pipeline.hpp"
#include "linforest/verify.hpp"

namespace {

using namespace linforest;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string out;
  bool quiet = false;
};

std::ostream& out_stream(const GlobalOpts& g, std::ofstream& file) {
  if (g.out.empty()) return std::cout;
  file.open(g.out);
  if (!file) throw Error(Errc::io_error, "cannot write " + g.out);
  return file;
}

void say(const GlobalOpts& g, const std::string& line) {
  if (!g.quiet) std::cout << line << '\n';
}

int cmd_gen(const GlobalOpts& g, const std::string& family, FamilyParams params) {
  Graph graph = gen_graph(parse_family(family), params, g.seed);
  std::ofstream file;
  write_graph(out_stream(g, file), graph);
  return kExitOk;
}

int cmd_lists(const GlobalOpts& g, const std::string& graph_path, int k, int palette,
              const std::string& mode) {
  Graph graph = read_graph_file(graph_path);
  ListAssignment L = gen_lists(graph, k, palette, parse_list_mode(mode), g.seed);
  std::ofstream file;
  write_lists(out_stream(g, file), L);
  return kExitOk;
}

int cmd_verify(const GlobalOpts& g, const std::string& graph_path, const std::string& lists_path,
               const std::string& coloring_path, const std::string& check, int t) {
  Graph graph = read_graph_file(graph_path);
  EdgeColoring phi = read_coloring_file(coloring_path, graph);
  std::optional<ListAssignment> L;
  if (!lists_path.empty()) L = read_lists_file(lists_path, graph);

  VerifyReport rep;
  if (check == "linear") {
    rep = check_linear(graph, L ? &*L : nullptr, phi);
  } else if (check == "proper") {
    rep = check_proper(graph, phi);
    if (rep.pass && L) rep = check_from_lists(graph, *L, phi);
  } else if (check == "degree-t") {
    rep = check_degree_t(graph, phi, t);
    if (rep.pass && L) rep = check_from_lists(graph, *L, phi);
  } else {
    throw Error(Errc::invalid_params, "unknown check '" + check + "'");
  }

  std::cout << (rep.pass ? "PASS" : "FAIL") << '\n';
  for (const auto& v : rep.violations) std::cout << v.describe(graph) << '\n';
  return rep.pass ? kExitOk : kExitFail;
}

int cmd_solve(const GlobalOpts& g, const std::string& graph_path, const std::string& lists_path,
              const PipelineConfig& cfg) {
  Graph graph = read_graph_file(graph_path);
  ListAssignment L = read_lists_file(lists_path, graph);
  SolveResult r = solve(graph, L, cfg);
  if (!r.success()) {
    std::cout << "FAIL stage=" << r.failed_stage << " cause=" << r.cause << '\n';
    return kExitFail;
  }
  std::ofstream file;
  write_coloring(out_stream(g, file), graph, *r.coloring);
  say(g, "PASS certified linear coloring");
  for (const auto& st : r.stages)
    say(g, "stage " + st.stage + " resamples=" + std::to_string(st.resamples));
  return kExitOk;
}

int cmd_exact(const GlobalOpts& g, const std::string& what, const std::string& graph_path,
              const std::string& lists_path, int t, int k, const SearchBudget& budget) {
  Graph graph = read_graph_file(graph_path);
  if (what == "la") {
    auto v = linear_arboricity(graph, budget);
    if (!v) {
      std::cout << "BudgetExceeded\n";
      return kExitFail;
    }
    std::cout << *v << '\n';
    return kExitOk;
  }
  if (what == "chi-t") {
    auto v = chromatic_index_t(graph, t, budget);
    if (!v) {
      std::cout << "BudgetExceeded\n";
      return kExitFail;
    }
    std::cout << *v << '\n';
    return kExitOk;
  }
  if (what == "decide") {
    if (lists_path.empty()) throw Error(Errc::invalid_params, "decide needs --lists");
    ListAssignment L = read_lists_file(lists_path, graph);
    DecideResult r = decide_linear_colorable(graph, L, budget);
    switch (r.verdict) {
      case Feasibility::yes: {
        std::cout << "Yes\n";
        if (!g.out.empty()) write_coloring_file(g.out, graph, *r.witness);
        return kExitOk;
      }
      case Feasibility::no:
        std::cout << "No\n";
        return kExitOk;
      case Feasibility::budget_exceeded:
        std::cout << "BudgetExceeded\n";
        return kExitFail;
    }
  }
  if (what == "lla-all") {
    AllListsResult r = list_linear_colorable_all_lists(graph, k, budget);
    switch (r.verdict) {
      case Feasibility::yes:
        std::cout << "Yes\n";
        return kExitOk;
      case Feasibility::no: {
        std::cout << "No\n";
        std::ofstream file;
        write_lists(out_stream(g, file), *r.counterexample);
        return kExitOk;
      }
      case Feasibility::budget_exceeded:
        std::cout << "BudgetExceeded\n";
        return kExitFail;
    }
  }
  throw Error(Errc::invalid_params, "unknown exact query '" + what + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear forest list edge coloring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--out", g.out, "output file (default: stdout)");
  app.add_flag("--quiet", g.quiet, "suppress progress chatter");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string family;
  FamilyParams fparams;
  gen->add_option("--family", family, "complete|complete-bipartite|cycle|path|random-regular")
      ->required();
  gen->add_option("--n", fparams.n, "vertex count");
  gen->add_option("--a", fparams.a, "left part size (complete-bipartite)");
  gen->add_option("--b", fparams.b, "right part size (complete-bipartite)");
  gen->add_option("--degree", fparams.degree, "degree (random-regular)");

  // lists
  auto* lists = app.add_subcommand("lists", "generate a list assignment");
  std::string lists_graph, lists_mode = "identical";
  int lists_k = 0, lists_palette = 0;
  lists->add_option("--graph", lists_graph, "graph file")->required();
  lists->add_option("--k", lists_k, "list size")->required();
  lists->add_option("--palette", lists_palette, "palette size (defaults to k)");
  lists->add_option("--mode", lists_mode, "identical|uniform|adversarial-shared")
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "check a coloring");
  std::string v_graph, v_lists, v_coloring, v_check = "linear";
  int v_t = 1;
  verify->add_option("--graph", v_graph, "graph file")->required();
  verify->add_option("--lists", v_lists, "list file (optional)");
  verify->add_option("--coloring", v_coloring, "coloring file")->required();
  verify->add_option("--check", v_check, "linear|proper|degree-t")->capture_default_str();
  verify->add_option("--t", v_t, "degree bound for degree-t")->capture_default_str();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "find a linear list coloring");
  std::string s_graph, s_lists, s_strategy = "auto";
  double s_d = 16.0, s_epsilon = 0.5;
  std::optional<int> s_qeff;
  std::optional<double> s_pres, s_pspar, s_thr, s_thlp, s_thsp, s_thcd, s_thh;
  std::optional<std::uint64_t> s_rounds;
  std::optional<int> s_cutoff;
  solve_cmd->add_option("--graph", s_graph, "graph file")->required();
  solve_cmd->add_option("--lists", s_lists, "list file")->required();
  solve_cmd->add_option("--strategy", s_strategy, "pipeline|direct|auto")->capture_default_str();
  solve_cmd->add_option("--d", s_d, "color degree parameter")->capture_default_str();
  solve_cmd->add_option("--epsilon", s_epsilon, "slack in (0,1)")->capture_default_str();
  solve_cmd->add_option("--q-eff", s_qeff, "effective girth threshold override");
  solve_cmd->add_option("--p-reserve", s_pres, "reserve probability override");
  solve_cmd->add_option("--p-sparsify", s_pspar, "sparsify probability override");
  solve_cmd->add_option("--theta-r", s_thr, "reserve edge-list threshold override");
  solve_cmd->add_option("--theta-lp", s_thlp, "residual list threshold override");
  solve_cmd->add_option("--theta-sp", s_thsp, "sparsified list threshold override");
  solve_cmd->add_option("--theta-cd", s_thcd, "sparsified color-degree threshold override");
  solve_cmd->add_option("--theta-h", s_thh, "hitting color-degree threshold override");
  solve_cmd->add_option("--max-rounds", s_rounds, "resampling round budget");
  solve_cmd->add_option("--direct-cutoff", s_cutoff, "auto strategy: exact search up to this size");

  // exact
  auto* exact = app.add_subcommand("exact", "brute-force ground truth");
  std::string e_what, e_graph, e_lists;
  int e_t = 1, e_k = 1;
  SearchBudget e_budget;
  exact->add_option("what", e_what, "la|chi-t|decide|lla-all")->required();
  exact->add_option("--graph", e_graph, "graph file")->required();
  exact->add_option("--lists", e_lists, "list file (decide)");
  exact->add_option("--t", e_t, "degree bound (chi-t)")->capture_default_str();
  exact->add_option("--k", e_k, "list size (lla-all)")->capture_default_str();
  exact->add_option("--node-limit", e_budget.node_limit, "search node budget")
      ->capture_default_str();
  exact->add_option("--time-limit", e_budget.time_limit_s, "search time budget (s)")
      ->capture_default_str();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "run a seeded experiment");
  auto* conc = experiment->add_subcommand("concentration", "binomial statistics of the samplers");
  ConcentrationParams cparams;
  std::string conc_ps = "0.1,0.3";
  conc->add_option("--ell", cparams.ell, "list size")->capture_default_str();
  conc->add_option("--p", conc_ps, "comma-separated probabilities")->capture_default_str();
  conc->add_option("--trials", cparams.trials, "trials per probability")->capture_default_str();

  auto* rate = experiment->add_subcommand("success-rate", "pipeline success fraction");
  SuccessRateParams rparams;
  rparams.palette = 0;  // 0 = default to k after parsing
  std::string rate_family = "cycle", rate_mode = "identical", rate_strategy = "auto";
  double rate_d = 8.0, rate_epsilon = 0.5;
  std::optional<double> r_pres, r_pspar, r_thr, r_thlp, r_thsp, r_thcd, r_thh;
  std::optional<int> r_qeff;
  std::optional<std::uint64_t> r_rounds;
  rate->add_option("--family", rate_family, "graph family")->capture_default_str();
  rate->add_option("--n", rparams.graph.n, "vertex count")->required();
  rate->add_option("--degree", rparams.graph.degree, "degree (random-regular)");
  rate->add_option("--a", rparams.graph.a, "left part (complete-bipartite)");
  rate->add_option("--b", rparams.graph.b, "right part (complete-bipartite)");
  rate->add_option("--mode", rate_mode, "list mode")->capture_default_str();
  rate->add_option("--k", rparams.k, "list size")->required();
  rate->add_option("--palette", rparams.palette, "palette size (defaults to k)");
  rate->add_option("--strategy", rate_strategy, "pipeline|direct|auto")->capture_default_str();
  rate->add_option("--d", rate_d, "color degree parameter")->capture_default_str();
  rate->add_option("--epsilon", rate_epsilon, "slack in (0,1)")->capture_default_str();
  rate->add_option("--trials", rparams.trials, "instances to run")->capture_default_str();
  rate->add_option("--q-eff", r_qeff, "girth threshold override");
  rate->add_option("--p-reserve", r_pres, "reserve probability override");
  rate->add_option("--p-sparsify", r_pspar, "sparsify probability override");
  rate->add_option("--theta-r", r_thr, "reserve threshold override");
  rate->add_option("--theta-lp", r_thlp, "residual threshold override");
  rate->add_option("--theta-sp", r_thsp, "sparsified list threshold override");
  rate->add_option("--theta-cd", r_thcd, "color-degree threshold override");
  rate->add_option("--theta-h", r_thh, "hitting threshold override");
  rate->add_option("--max-rounds", r_rounds, "resampling round budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  auto build_config = [](double d, double epsilon, const std::string& strategy,
                         std::uint64_t seed, std::optional<int> qeff, std::optional<double> pres,
                         std::optional<double> pspar, std::optional<double> thr,
                         std::optional<double> thlp, std::optional<double> thsp,
                         std::optional<double> thcd, std::optional<double> thh,
                         std::optional<std::uint64_t> rounds, std::optional<int> cutoff) {
    PipelineConfig cfg = PipelineConfig::defaults(d, epsilon);
    if (cfg.p_reserve >= 1.0 && !pres)
      std::cerr << "warning: 2/log^{1/4} d exceeds 1 at d=" << d
                << "; reserve probability clamped to 1 (override with --p-reserve)\n";
    if (cfg.p_sparsify >= 1.0 && !pspar)
      std::cerr << "warning: log^3 d / d exceeds 1 at d=" << d
                << "; sparsify probability clamped to 1 (override with --p-sparsify)\n";
    cfg.seed = seed;
    if (strategy == "pipeline")
      cfg.strategy = Strategy::pipeline;
    else if (strategy == "direct")
      cfg.strategy = Strategy::direct;
    else if (strategy == "auto")
      cfg.strategy = Strategy::automatic;
    else
      throw Error(Errc::invalid_params, "unknown strategy '" + strategy + "'");
    if (qeff) cfg.q_eff = *qeff;
    if (pres) cfg.p_reserve = *pres;
    if (pspar) cfg.p_sparsify = *pspar;
    if (thr) cfg.theta_reserve = *thr;
    if (thlp) cfg.theta_residual = *thlp;
    if (thsp) cfg.theta_sparse_list = *thsp;
    if (thcd) cfg.theta_color_degree = *thcd;
    if (thh) cfg.theta_hitting = *thh;
    if (rounds) cfg.max_rounds = *rounds;
    if (cutoff) cfg.direct_cutoff = *cutoff;
    cfg.validate();
    return cfg;
  };

  try {
    if (gen->parsed()) return cmd_gen(g, family, fparams);
    if (lists->parsed()) {
      if (lists_palette == 0) lists_palette = lists_k;
      return cmd_lists(g, lists_graph, lists_k, lists_palette, lists_mode);
    }
    if (verify->parsed()) return cmd_verify(g, v_graph, v_lists, v_coloring, v_check, v_t);
    if (solve_cmd->parsed()) {
      PipelineConfig cfg =
          build_config(s_d, s_epsilon, s_strategy, g.seed, s_qeff, s_pres, s_pspar, s_thr, s_thlp,
                       s_thsp, s_thcd, s_thh, s_rounds, s_cutoff);
      return cmd_solve(g, s_graph, s_lists, cfg);
    }
    if (exact->parsed()) return cmd_exact(g, e_what, e_graph, e_lists, e_t, e_k, e_budget);
    if (experiment->parsed()) {
      std::ofstream file;
      if (conc->parsed()) {
        cparams.seed = g.seed;
        cparams.ps.clear();
        std::istringstream ps(conc_ps);
        std::string tok;
        while (std::getline(ps, tok, ',')) cparams.ps.push_back(std::stod(tok));
        run_concentration(cparams, out_stream(g, file));
        return kExitOk;
      }
      if (rate->parsed()) {
        rparams.family = parse_family(rate_family);
        rparams.mode = parse_list_mode(rate_mode);
        if (rparams.palette == 0) rparams.palette = rparams.k;
        rparams.seed = g.seed;
        rparams.cfg = build_config(rate_d, rate_epsilon, rate_strategy, g.seed, r_qeff, r_pres,
                                   r_pspar, r_thr, r_thlp, r_thsp, r_thcd, r_thh, r_rounds,
                                   std::nullopt);
        run_success_rate(rparams, out_stream(g, file));
        return kExitOk;
      }
      std::cerr << "experiment needs a subcommand: concentration | success-rate\n";
      return kExitUsage;
    }
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    switch (e.kind()) {
      case Errc::io_error:
      case Errc::format_error:
        return kExitIo;
      case Errc::invalid_params:
        return kExitUsage;
      default:
        return kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitFail;
  }
}
