// Release acceptance suite. Runs the eight gate criteria end to end and
// prints one PASS/FAIL line per criterion; exit code is the failure count.
// argv[1]: path to the CLI binary (used by the determinism criterion).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <unistd.h>

#include <vector>

#include "linforest/exact_oracle.hpp"
#include "linforest/experiments.hpp"
#include "linforest/generators.hpp"
#include "linforest/pipeline.hpp"
#include "linforest/rng.hpp"
#include "linforest/verify.hpp"

using namespace linforest;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

ListAssignment shared_lists(const Graph& g, int k) {
  ListAssignment L(g, k + 1);
  for (int e = 0; e < g.edge_count(); ++e)
    for (Color c = 1; c <= k; ++c) L.add(e, c);
  return L;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertex_count();
}

// All graphs on exactly n labeled vertices, one per isomorphism class,
// as edge masks over the pairs (u,v), u < v, in lexicographic order.
std::vector<Graph> graphs_up_to_iso(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int bits = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n),
                                           std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int i = 0; i < bits; ++i) {
    pair_index[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].first)]
              [static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].second)] = i;
    pair_index[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].second)]
              [static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].first)] = i;
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    std::iota(perm.begin(), perm.end(), 0);
    bool canonical = true;
    do {
      std::uint32_t mapped = 0;
      for (int i = 0; i < bits; ++i)
        if (mask & (1u << i)) {
          auto [u, v] = pairs[static_cast<std::size_t>(i)];
          mapped |= 1u << pair_index[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])]
                                    [static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
        }
      if (mapped < mask) {
        canonical = false;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!canonical) continue;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < bits; ++i)
      if (mask & (1u << i)) edges.push_back(pairs[static_cast<std::size_t>(i)]);
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<Graph> graphs_up_to_six() {
  std::vector<Graph> all;
  for (int n = 1; n <= 6; ++n)
    for (auto& g : graphs_up_to_iso(n)) all.push_back(std::move(g));
  return all;
}

// ---------------------------------------------------------------------------

Outcome criterion_exact_values() {
  Outcome out;
  struct Case {
    const char* name;
    Graph g;
    int expect;
  };
  std::vector<Case> cases;
  cases.push_back({"K3", gen_graph(GraphFamily::complete, {.n = 3}, 0), 2});
  cases.push_back({"K4", gen_graph(GraphFamily::complete, {.n = 4}, 0), 2});
  cases.push_back({"K5", gen_graph(GraphFamily::complete, {.n = 5}, 0), 3});
  cases.push_back({"K6", gen_graph(GraphFamily::complete, {.n = 6}, 0), 3});
  cases.push_back({"C5", gen_graph(GraphFamily::cycle, {.n = 5}, 0), 2});
  cases.push_back({"C12", gen_graph(GraphFamily::cycle, {.n = 12}, 0), 2});
  cases.push_back({"P2", gen_graph(GraphFamily::path, {.n = 2}, 0), 1});
  cases.push_back({"P9", gen_graph(GraphFamily::path, {.n = 9}, 0), 1});
  cases.push_back({"K33", gen_graph(GraphFamily::complete_bipartite, {.a = 3, .b = 3}, 0), 2});
  for (const auto& c : cases) {
    auto start = Clock::now();
    auto la = linear_arboricity(c.g, {200'000'000, 60.0});
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!la.has_value())
      out.fail(std::string(c.name) + " exceeded its budget");
    else if (*la != c.expect)
      out.fail(std::string(c.name) + " gave " + std::to_string(*la) + " expected " +
               std::to_string(c.expect));
    else if (secs > 60.0)
      out.fail(std::string(c.name) + " took " + std::to_string(secs) + "s");
  }
  if (out.pass) out.detail = "9 exact values reproduced";
  return out;
}

Outcome criterion_bounds_sweep() {
  Outcome out;
  auto start = Clock::now();
  int checked = 0, violations = 0;
  for (const auto& g : graphs_up_to_six()) {
    if (!is_connected(g)) continue;
    ++checked;
    auto la = linear_arboricity(g, {200'000'000, 60.0});
    if (!la.has_value()) {
      out.fail("budget exceeded on a 6-vertex graph");
      continue;
    }
    int delta = max_degree(g);
    if (*la < (delta + 1) / 2) ++violations;
    if (delta <= 6 && *la > (delta + 2) / 2) ++violations;
  }
  if (violations > 0) out.fail(std::to_string(violations) + " bound violations");
  if (std::chrono::duration<double>(Clock::now() - start).count() > 600.0)
    out.fail("exceeded the 10 minute budget");
  if (out.pass)
    out.detail = std::to_string(checked) + " connected graphs within the degree bounds";
  return out;
}

Outcome criterion_copy_chain() {
  Outcome out;
  int checked = 0, violations = 0;
  for (const auto& g : graphs_up_to_six()) {
    auto chi1 = chromatic_index_t(g, 1, {200'000'000, 60.0});
    if (!chi1.has_value()) {
      out.fail("budget exceeded");
      continue;
    }
    for (int t = 1; t <= 3; ++t) {
      auto chit = chromatic_index_t(g, t, {200'000'000, 60.0});
      if (!chit.has_value()) {
        out.fail("budget exceeded");
        continue;
      }
      ++checked;
      if (*chit > (*chi1 + t - 1) / t) ++violations;   // merge t colors into one
      if (*chi1 > (t + 1) * *chit) ++violations;        // split a class with t+1 colors
    }
  }
  if (violations > 0) out.fail(std::to_string(violations) + " chain violations");
  if (out.pass) out.detail = std::to_string(checked) + " (graph, t) pairs inside the chain";
  return out;
}

Outcome criterion_fuzz() {
  Outcome out;
  auto start = Clock::now();
  Rng rng(20260809);
  int runs = 0, certified = 0, failures = 0, uncertified = 0;

  auto run_one = [&](const Graph& g, const ListAssignment& L, PipelineConfig cfg) {
    ++runs;
    cfg.seed = rng.next_u64();
    SolveResult r = solve(g, L, cfg);
    if (!r.success()) {
      ++failures;
      if (r.failed_stage.empty() || r.cause.empty()) out.fail("failure without diagnostics");
      return;
    }
    if (check_linear(g, &L, *r.coloring).pass)
      ++certified;
    else
      ++uncertified;
  };

  auto loose = [](double p, double thlp, double thh) {
    PipelineConfig cfg;
    cfg.strategy = Strategy::pipeline;
    cfg.p_reserve = p;
    cfg.theta_reserve = 1;
    cfg.theta_residual = thlp;
    cfg.theta_sparse_list = thlp;
    cfg.theta_hitting = thh;
    cfg.max_rounds = 20000;
    return cfg;
  };

  for (int i = 0; i < 100; ++i) {  // paths, one shared color
    Graph g = gen_graph(GraphFamily::path, {.n = 8 + static_cast<int>(rng.bounded(33))}, 0);
    PipelineConfig cfg;
    cfg.strategy = Strategy::automatic;
    cfg.p_reserve = 0;
    run_one(g, shared_lists(g, 1), cfg);
  }
  for (int i = 0; i < 100; ++i) {  // cycles, six shared colors
    Graph g = gen_graph(GraphFamily::cycle, {.n = 8 + static_cast<int>(rng.bounded(33))}, 0);
    PipelineConfig cfg = loose(0.4, 2, 1);
    run_one(g, shared_lists(g, 6), cfg);
  }
  for (int i = 0; i < 100; ++i) {  // complete graphs at their threshold, exact strategy
    int n = 3 + static_cast<int>(rng.bounded(4));
    Graph g = gen_graph(GraphFamily::complete, {.n = n}, 0);
    PipelineConfig cfg;
    cfg.strategy = Strategy::direct;
    run_one(g, shared_lists(g, n / 2 + 1), cfg);
  }
  for (int i = 0; i < 100; ++i) {  // complete graphs below threshold: explicit infeasibility
    int n = 3 + static_cast<int>(rng.bounded(4));
    Graph g = gen_graph(GraphFamily::complete, {.n = n}, 0);
    PipelineConfig cfg;
    cfg.strategy = Strategy::direct;
    run_one(g, shared_lists(g, (max_degree(g) + 1) / 2), cfg);
  }
  const int rr_sizes[3] = {16, 32, 64};
  for (int i = 0; i < 100; ++i) {  // 4-regular, wide shared lists
    FamilyParams fp;
    fp.n = rr_sizes[i % 3];
    fp.degree = 4;
    Graph g = gen_graph(GraphFamily::random_regular, fp, rng.next_u64());
    run_one(g, shared_lists(g, 16), loose(0.45, 3, 1));
  }
  for (int i = 0; i < 100; ++i) {  // 6-regular
    FamilyParams fp;
    fp.n = i % 2 == 0 ? 24 : 48;
    fp.degree = 6;
    Graph g = gen_graph(GraphFamily::random_regular, fp, rng.next_u64());
    run_one(g, shared_lists(g, 20), loose(0.42, 4, 2));
  }
  for (int i = 0; i < 100; ++i) {  // 8-regular up to n=64
    FamilyParams fp;
    fp.n = i % 2 == 0 ? 32 : 64;
    fp.degree = 8;
    Graph g = gen_graph(GraphFamily::random_regular, fp, rng.next_u64());
    run_one(g, shared_lists(g, 24), loose(0.40, 6, 2));
  }
  for (int i = 0; i < 100; ++i) {  // uniform wide palettes
    FamilyParams fp;
    fp.n = 16;
    fp.degree = 4;
    Graph g = gen_graph(GraphFamily::random_regular, fp, rng.next_u64());
    ListAssignment L = gen_lists(g, 8, 48, ListMode::uniform, rng.next_u64());
    PipelineConfig cfg = loose(0.45, 2, 1);
    cfg.theta_reserve = 0;
    run_one(g, L, cfg);
  }
  for (int i = 0; i < 100; ++i) {  // adversarial shared lists: the hostile case
    FamilyParams fp;
    fp.n = 16;
    fp.degree = 4;
    Graph g = gen_graph(GraphFamily::random_regular, fp, rng.next_u64());
    ListAssignment L = gen_lists(g, 10, 20, ListMode::adversarial_shared, rng.next_u64());
    PipelineConfig cfg = loose(0.4, 4, 1);
    cfg.max_rounds = 2000;
    run_one(g, L, cfg);
  }
  for (int i = 0; i < 100; ++i) {  // even cycles squeezed onto few base colors
    Graph g = gen_graph(GraphFamily::cycle, {.n = 8 + 2 * static_cast<int>(rng.bounded(7))}, 0);
    run_one(g, shared_lists(g, 4), loose(0.7, 1, 1));
  }

  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (runs != 1000) out.fail("expected 1000 runs, got " + std::to_string(runs));
  if (uncertified > 0) out.fail(std::to_string(uncertified) + " uncertified colorings");
  if (certified < 600)
    out.fail("only " + std::to_string(certified) + " certified successes out of 1000");
  if (secs > 900.0) out.fail("exceeded the 15 minute budget");
  if (out.pass)
    out.detail = std::to_string(certified) + " certified, " + std::to_string(failures) +
                 " explicit failures, 0 uncertified";
  return out;
}

Outcome criterion_stage_invariants() {
  Outcome out;
  Rng rng(55);
  int successes = 0, attempts = 0, with_cycles = 0, violations = 0;

  auto note = [&](bool ok, const char* what) {
    if (!ok) {
      ++violations;
      out.fail(what);
    }
  };

  while (successes < 200 && attempts < 1000) {
    ++attempts;
    int which = attempts % 5;
    Graph g;
    int k = 6;
    PipelineConfig cfg;
    cfg.strategy = Strategy::pipeline;
    cfg.seed = rng.next_u64();
    cfg.max_rounds = 30000;
    cfg.theta_reserve = 1;
    cfg.theta_hitting = 1;
    switch (which) {
      case 0:  // cycles
        g = gen_graph(GraphFamily::cycle, {.n = 8 + static_cast<int>(rng.bounded(12))}, 0);
        k = 6;
        cfg.p_reserve = 0.4;
        cfg.theta_residual = 2;
        cfg.theta_sparse_list = 2;
        break;
      case 1: {  // 4-regular, wide lists
        FamilyParams fp;
        fp.n = 16;
        fp.degree = 4;
        g = gen_graph(GraphFamily::random_regular, fp, rng.next_u64());
        k = 16;
        cfg.p_reserve = 0.45;
        cfg.theta_residual = 3;
        cfg.theta_sparse_list = 3;
        break;
      }
      case 2: {  // cubic with a real girth threshold and lossy sparsify
        FamilyParams fp;
        fp.n = 10;
        fp.degree = 3;
        g = gen_graph(GraphFamily::random_regular, fp, rng.next_u64());
        k = 8;
        cfg.q_eff = 5;
        cfg.p_reserve = 0.35;
        cfg.theta_residual = 3;
        cfg.p_sparsify = 0.8;
        cfg.theta_sparse_list = 2;
        break;
      }
      case 3:  // K44 squeezed: monochromatic cycles show up here
        g = gen_graph(GraphFamily::complete_bipartite, {.a = 4, .b = 4}, 0);
        k = 7;
        cfg.p_reserve = 0.5;
        cfg.theta_residual = 2;
        cfg.theta_sparse_list = 2;
        break;
      default: {  // small 4-regular squeezed
        FamilyParams fp;
        fp.n = 8;
        fp.degree = 4;
        g = gen_graph(GraphFamily::random_regular, fp, rng.next_u64());
        k = 6;
        cfg.p_reserve = 0.45;
        cfg.theta_residual = 2;
        cfg.theta_sparse_list = 2;
        break;
      }
    }
    ListAssignment L = shared_lists(g, k);

    try {
      ReserveSplit split = reserve_colors(g, L, cfg);
      // reserve split disjointness, edge and vertex level
      for (int e = 0; e < g.edge_count(); ++e) {
        note(!split.reserve.list(e).intersects(split.residual.list(e)),
             "R(e) and L'(e) intersect");
        note((split.reserve.list(e) - L.list(e)).none(), "R(e) escapes L(e)");
        note((split.residual.list(e) - L.list(e)).none(), "L'(e) escapes L(e)");
      }
      for (int v = 0; v < g.vertex_count(); ++v)
        note(!split.vertex_reserve[static_cast<std::size_t>(v)].intersects(
                 vertex_list(split.residual, v)),
             "R(v) and L'(v) intersect");

      ListAssignment sparse = sparsify_high_girth(g, split.residual, cfg);
      for (Color c = 0; c < sparse.palette(); ++c) {
        EdgeSubset support(static_cast<std::size_t>(g.edge_count()));
        bool nonempty = false;
        for (int e = 0; e < g.edge_count(); ++e)
          if (sparse.contains(e, c)) {
            support.set(static_cast<std::size_t>(e));
            nonempty = true;
          }
        if (nonempty) note(girth(g, &support) >= cfg.q_eff, "support girth below q_eff");
      }

      EdgeColoring phi = degree_two_coloring(g, sparse, cfg);
      note(check_degree_t(g, phi, 2).pass, "merged coloring exceeds degree 2");
      note(check_from_lists(g, sparse, phi).pass, "merged coloring leaves its lists");

      auto cycles_colored = monochromatic_cycles(g, phi);
      EdgeColoring psi = phi;
      if (!cycles_colored.empty()) {
        ++with_cycles;
        std::vector<std::vector<int>> cycles;
        for (auto& [c, cyc] : cycles_colored) cycles.push_back(cyc);
        CycleBreakPlan plan = break_cycles(g, split.reserve, cycles, cfg);
        for (const auto& cyc : cycles) {
          bool hit = false;
          for (int e : cyc) hit = hit || plan.hitting.test(static_cast<std::size_t>(e));
          note(hit, "a monochromatic cycle was not hit");
        }
        // d_H^R(v,c) <= theta_hitting, recounted from scratch
        for (int v = 0; v < g.vertex_count(); ++v)
          for (Color c = 0; c < split.reserve.palette(); ++c) {
            int deg = 0;
            for (const auto& [w, e] : g.neighbors(v))
              if (plan.hitting.test(static_cast<std::size_t>(e)) && split.reserve.contains(e, c))
                ++deg;
            note(deg <= cfg.theta_hitting, "hitting color degree exceeds theta");
          }
        psi = recolor_and_merge(g, phi, sparse, plan.hitting, split.reserve, cfg, &L);
      }
      note(check_linear(g, &L, psi).pass, "final coloring failed certification");
      ++successes;
    } catch (const Error& err) {
      if (err.kind() != Errc::round_budget_exhausted && err.kind() != Errc::infeasible) throw;
    }
  }

  if (successes < 200) out.fail("only " + std::to_string(successes) + " successful runs");
  if (with_cycles < 10)
    out.fail("only " + std::to_string(with_cycles) + " runs exercised cycle breaking");
  if (out.pass)
    out.detail = std::to_string(successes) + " successful runs (" + std::to_string(with_cycles) +
                 " with cycle breaking), " + std::to_string(violations) + " violations";
  return out;
}

Outcome criterion_concentration() {
  Outcome out;
  ConcentrationParams params;
  params.ell = 100;
  params.ps = {0.1, 0.3};
  params.trials = 10000;
  params.seed = 2026;
  std::ostringstream csv;
  run_concentration(params, csv);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0, inside = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::istringstream rs(line);
    std::string cell;
    while (std::getline(rs, cell, ',')) cells.push_back(cell);
    if (cells.size() >= 12 && cells[11] == "1") ++inside;
  }
  if (rows != 6) out.fail("expected 6 cells, got " + std::to_string(rows));
  if (inside != rows)
    out.fail(std::to_string(rows - inside) + " cells outside 3 standard errors");
  if (out.pass) out.detail = "6/6 cells within 3 standard errors over 10^4 trials";
  return out;
}

Outcome criterion_oracle_equivalence() {
  Outcome out;
  int disagreements = 0, checked = 0;
  for (const auto& g : graphs_up_to_six()) {
    auto la = linear_arboricity(g, {200'000'000, 60.0});
    if (!la.has_value()) {
      out.fail("budget exceeded");
      continue;
    }
    for (int k = 1; k <= 4; ++k) {
      DecideResult r = decide_linear_colorable(g, shared_lists(g, k), {200'000'000, 60.0});
      if (r.verdict == Feasibility::budget_exceeded) {
        out.fail("budget exceeded");
        continue;
      }
      ++checked;
      bool expect = k >= *la;
      if ((r.verdict == Feasibility::yes) != expect) ++disagreements;
    }
  }
  if (disagreements > 0) out.fail(std::to_string(disagreements) + " disagreements");
  if (out.pass) out.detail = std::to_string(checked) + " (graph, k) cells agree with the threshold";
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome criterion_cli_determinism(const std::string& cli) {
  Outcome out;
  if (cli.empty()) {
    out.fail("no CLI path supplied");
    return out;
  }
  std::string dir = "/tmp/linforest_accept_" + std::to_string(::getpid());
  auto shell = [](const std::string& cmd) {
    if (std::system(cmd.c_str()) == -1) std::perror("system");
  };
  shell("mkdir -p " + dir);
  auto sh = [&](const std::string& args) { shell(cli + " " + args + " > /dev/null 2>&1"); };

  // every command twice with the same seed; outputs must match byte for byte
  sh("gen --family random-regular --n 16 --degree 4 --seed 5 --out " + dir + "/g1");
  sh("gen --family random-regular --n 16 --degree 4 --seed 5 --out " + dir + "/g2");
  if (slurp(dir + "/g1") != slurp(dir + "/g2") || slurp(dir + "/g1").empty())
    out.fail("gen not reproducible");

  sh("lists --graph " + dir + "/g1 --k 3 --palette 9 --mode uniform --seed 7 --out " + dir + "/l1");
  sh("lists --graph " + dir + "/g1 --k 3 --palette 9 --mode uniform --seed 7 --out " + dir + "/l2");
  if (slurp(dir + "/l1") != slurp(dir + "/l2") || slurp(dir + "/l1").empty())
    out.fail("lists not reproducible");

  sh("gen --family cycle --n 12 --out " + dir + "/cyc");
  sh("lists --graph " + dir + "/cyc --k 6 --mode identical --out " + dir + "/cycl");
  std::string solve_args = "solve --graph " + dir + "/cyc --lists " + dir +
                           "/cycl --strategy pipeline --seed 9 --d 8 --epsilon 0.5 "
                           "--p-reserve 0.4 --p-sparsify 1.0 --theta-r 1 --theta-lp 2 "
                           "--theta-sp 2 --theta-h 1 --max-rounds 30000 --out ";
  sh(solve_args + dir + "/s1");
  sh(solve_args + dir + "/s2");
  if (slurp(dir + "/s1") != slurp(dir + "/s2") || slurp(dir + "/s1").empty())
    out.fail("solve not reproducible");

  sh("exact decide --graph " + dir + "/cyc --lists " + dir + "/cycl --out " + dir + "/w1");
  sh("exact decide --graph " + dir + "/cyc --lists " + dir + "/cycl --out " + dir + "/w2");
  if (slurp(dir + "/w1") != slurp(dir + "/w2") || slurp(dir + "/w1").empty())
    out.fail("exact decide not reproducible");

  sh("experiment concentration --ell 40 --p 0.2 --trials 300 --seed 3 --out " + dir + "/e1");
  sh("experiment concentration --ell 40 --p 0.2 --trials 300 --seed 3 --out " + dir + "/e2");
  if (slurp(dir + "/e1") != slurp(dir + "/e2") || slurp(dir + "/e1").empty())
    out.fail("experiment not reproducible");

  sh("experiment success-rate --family cycle --n 10 --k 6 --trials 10 --seed 4 "
     "--strategy pipeline --p-reserve 0.4 --theta-r 1 --theta-lp 2 --theta-sp 2 --theta-h 1 "
     "--max-rounds 30000 --out " +
     dir + "/r1");
  sh("experiment success-rate --family cycle --n 10 --k 6 --trials 10 --seed 4 "
     "--strategy pipeline --p-reserve 0.4 --theta-r 1 --theta-lp 2 --theta-sp 2 --theta-h 1 "
     "--max-rounds 30000 --out " +
     dir + "/r2");
  if (slurp(dir + "/r1") != slurp(dir + "/r2") || slurp(dir + "/r1").empty())
    out.fail("success-rate not reproducible");

  shell("rm -rf " + dir);
  if (out.pass) out.detail = "6 command kinds byte-identical across repeat runs";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  struct Entry {
    const char* name;
    std::function<Outcome()> fn;
  };
  std::vector<Entry> criteria;
  criteria.push_back({"exact-values", criterion_exact_values});
  criteria.push_back({"degree-bounds-sweep", criterion_bounds_sweep});
  criteria.push_back({"copy-chain", criterion_copy_chain});
  criteria.push_back({"soundness-fuzz", criterion_fuzz});
  criteria.push_back({"stage-invariants", criterion_stage_invariants});
  criteria.push_back({"concentration", criterion_concentration});
  criteria.push_back({"oracle-equivalence", criterion_oracle_equivalence});
  criteria.push_back({"cli-determinism", [cli] { return criterion_cli_determinism(cli); }});

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Outcome out;
    try {
      out = criteria[i].fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s criterion-%zu %s (%.1fs)%s%s\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, secs, out.detail.empty() ? "" : ": ",
                out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures;
}
