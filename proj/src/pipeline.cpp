#include "linforest/pipeline.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <numeric>

#include "linforest/exact_oracle.hpp"
#include "linforest/rng.hpp"
#include "linforest/verify.hpp"

namespace linforest {

namespace {

// per-stage RNG streams derived from cfg.seed
enum StageStream : std::uint64_t {
  kReserveStream = 1,
  kSparsifyStream = 2,
  kBreakStream = 3,
  kColorStream = 4,
};

}  // namespace

double q_of_d(double d) {
  if (!(d > 0.0)) throw Error(Errc::domain_error, "d must be positive");
  double ld = std::log(d);
  if (!(ld > 0.0) || !(std::log(ld) > 0.0))
    throw Error(Errc::domain_error, "log log d <= 0 at d = " + std::to_string(d));
  return ld / (6.0 * std::log(ld));
}

PipelineConfig PipelineConfig::defaults(double d, double epsilon) {
  PipelineConfig cfg;
  cfg.d = d;
  cfg.epsilon = epsilon;
  cfg.validate();
  double ld = std::log(std::max(d, 1.0 + 1e-9));
  cfg.q_eff = 3;
  if (d > std::exp(1.0)) cfg.q_eff = std::max(3, static_cast<int>(std::ceil(q_of_d(d))));
  cfg.p_reserve = std::clamp(2.0 / std::pow(ld, 0.25), 0.0, 1.0);
  cfg.p_sparsify = std::clamp(std::pow(ld, 3.0) / d, 0.0, 1.0);
  cfg.theta_reserve = d / std::sqrt(ld) * (1.0 + epsilon);
  cfg.theta_residual = d / 2.0 * (1.0 + epsilon / 2.0);
  cfg.theta_sparse_list = (1.0 + epsilon / 2.0) * std::pow(ld, 3.0) / 2.0;
  cfg.theta_color_degree = std::pow(ld, 3.0) + std::pow(ld, 2.5);
  cfg.theta_hitting = d / std::sqrt(ld);
  return cfg;
}

int PipelineConfig::target_list_size() const {
  return static_cast<int>(std::ceil(d / 2.0 * (1.0 + epsilon)));
}

void PipelineConfig::validate() const {
  if (!(d > 0.0)) throw Error(Errc::invalid_params, "d must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error(Errc::invalid_params, "epsilon must lie in (0,1)");
  if (!(p_reserve >= 0.0 && p_reserve <= 1.0))
    throw Error(Errc::invalid_params, "p_reserve must lie in [0,1]");
  if (!(p_sparsify >= 0.0 && p_sparsify <= 1.0))
    throw Error(Errc::invalid_params, "p_sparsify must lie in [0,1]");
  if (q_eff < 3) throw Error(Errc::invalid_params, "q_eff must be >= 3");
  for (double th : {theta_reserve, theta_residual, theta_sparse_list, theta_color_degree,
                    theta_hitting})
    if (!(th >= 0.0)) throw Error(Errc::invalid_params, "thresholds must be non-negative");
  if (max_rounds < 1) throw Error(Errc::invalid_params, "max_rounds must be >= 1");
}

// ---------------------------------------------------------------------------
// reserve_colors

namespace {

// Trial bookkeeping for per-vertex color draws: one Bernoulli trial per
// (v, c) with c in L(v).
struct VertexColorTrials {
  std::vector<std::vector<Color>> colors;  // per vertex, ascending
  std::vector<int> offset;                 // per vertex, first trial index
  int total = 0;

  VertexColorTrials(const Graph& g, const ListAssignment& L) {
    colors.resize(static_cast<std::size_t>(g.vertex_count()));
    offset.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
      offset[static_cast<std::size_t>(v)] = total;
      Bitset lv = vertex_list(L, v);
      auto& cs = colors[static_cast<std::size_t>(v)];
      lv.for_each([&](std::size_t c) { cs.push_back(static_cast<Color>(c)); });
      total += static_cast<int>(cs.size());
    }
  }

  int index(int v, Color c) const {
    const auto& cs = colors[static_cast<std::size_t>(v)];
    auto it = std::lower_bound(cs.begin(), cs.end(), c);
    return offset[static_cast<std::size_t>(v)] + static_cast<int>(it - cs.begin());
  }

  std::vector<int> all_of_vertex(int v) const {
    std::vector<int> out(colors[static_cast<std::size_t>(v)].size());
    std::iota(out.begin(), out.end(), offset[static_cast<std::size_t>(v)]);
    return out;
  }
};

[[noreturn]] void throw_budget(const std::string& stage, const std::vector<lll::BadEvent>& events,
                               const lll::ResampleOutcome& out) {
  std::string label = out.last_violated >= 0
                          ? events[static_cast<std::size_t>(out.last_violated)].label
                          : "none";
  throw Error(Errc::round_budget_exhausted,
              stage + ": event " + label + " still violated after " +
                  std::to_string(out.resamples) + " resamples");
}

}  // namespace

ReserveSplit reserve_colors(const Graph& g, const ListAssignment& L, const PipelineConfig& cfg) {
  cfg.validate();
  if (L.edge_count() > 0 && list_size(L) < 1)
    throw Error(Errc::invalid_params, "reserve stage needs non-empty lists");

  VertexColorTrials trials(g, L);
  lll::VariableSpace space;
  for (int i = 0; i < trials.total; ++i) space.add_bernoulli(cfg.p_reserve);

  // per edge the trial indices of (u,c) and (v,c) for c in L(e)
  struct EdgePairs {
    std::vector<std::pair<int, int>> uv;
  };
  std::vector<EdgePairs> pairs(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    L.list(e).for_each([&](std::size_t c) {
      pairs[static_cast<std::size_t>(e)].uv.emplace_back(
          trials.index(u, static_cast<Color>(c)), trials.index(v, static_cast<Color>(c)));
    });
  }

  std::vector<lll::BadEvent> events;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    std::vector<int> scope = trials.all_of_vertex(u);
    for (int t : trials.all_of_vertex(v)) scope.push_back(t);
    const auto* ep = &pairs[static_cast<std::size_t>(e)];
    if (cfg.theta_reserve > 0) {
      events.push_back({"A_" + std::to_string(e), scope,
                        [ep, th = cfg.theta_reserve](const lll::Assignment& a) {
                          int r = 0;
                          for (auto [tu, tv] : ep->uv) r += a[static_cast<std::size_t>(tu)] & a[static_cast<std::size_t>(tv)];
                          return r < th;
                        }});
    }
    if (cfg.theta_residual > 0) {
      events.push_back({"B_" + std::to_string(e), std::move(scope),
                        [ep, th = cfg.theta_residual](const lll::Assignment& a) {
                          int r = 0;
                          for (auto [tu, tv] : ep->uv)
                            r += (a[static_cast<std::size_t>(tu)] | a[static_cast<std::size_t>(tv)]) ^ 1u;
                          return r < th;
                        }});
    }
  }

  auto out = lll::resample_until_clear(space, events, cfg.max_rounds,
                                       Rng::derive(cfg.seed, kReserveStream), cfg.rule);
  if (!out.success) throw_budget("reserve", events, out);

  ReserveSplit split{{}, ListAssignment(g, L.palette()), ListAssignment(g, L.palette()),
                     out.resamples};
  split.vertex_reserve.assign(static_cast<std::size_t>(g.vertex_count()),
                              Bitset(static_cast<std::size_t>(L.palette())));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& cs = trials.colors[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (out.assignment[static_cast<std::size_t>(trials.offset[static_cast<std::size_t>(v)]) + i])
        split.vertex_reserve[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(cs[i]));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    const Bitset& ru = split.vertex_reserve[static_cast<std::size_t>(u)];
    const Bitset& rv = split.vertex_reserve[static_cast<std::size_t>(v)];
    split.reserve.list(e) = Bitset::and3(L.list(e), ru, rv);
    split.residual.list(e) = Bitset::diff2(L.list(e), ru, rv);
  }
  return split;
}

// ---------------------------------------------------------------------------
// sparsify_high_girth

namespace {

// All simple cycles of length in [3, max_len], each once, as edge sequences.
// DFS rooted at the cycle's minimum vertex; direction fixed by requiring the
// second vertex to be smaller than the last.
std::vector<std::vector<int>> short_cycles(const Graph& g, int max_len) {
  std::vector<std::vector<int>> out;
  if (max_len < 3) return out;
  std::vector<int> vpath, epath;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);

  auto dfs = [&](auto&& self, int root, int cur) -> void {
    for (const auto& [w, e] : g.neighbors(cur)) {
      if (w == root && static_cast<int>(vpath.size()) >= 3) {
        if (vpath[1] < vpath.back()) {
          epath.push_back(e);
          out.push_back(epath);
          epath.pop_back();
        }
        continue;
      }
      if (w <= root || on_path[static_cast<std::size_t>(w)]) continue;
      if (static_cast<int>(vpath.size()) >= max_len) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      vpath.push_back(w);
      epath.push_back(e);
      self(self, root, w);
      epath.pop_back();
      vpath.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };

  for (int root = 0; root < g.vertex_count(); ++root) {
    on_path[static_cast<std::size_t>(root)] = 1;
    vpath.assign(1, root);
    epath.clear();
    dfs(dfs, root, root);
    on_path[static_cast<std::size_t>(root)] = 0;
  }
  return out;
}

}  // namespace

ListAssignment sparsify_high_girth(const Graph& g, const ListAssignment& L,
                                   const PipelineConfig& cfg, std::uint64_t* resamples) {
  cfg.validate();

  // one Bernoulli trial per (e, c)
  std::vector<std::vector<Color>> edge_colors(static_cast<std::size_t>(g.edge_count()));
  std::vector<int> offset(static_cast<std::size_t>(g.edge_count()));
  int total = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    offset[static_cast<std::size_t>(e)] = total;
    L.list(e).for_each([&](std::size_t c) {
      edge_colors[static_cast<std::size_t>(e)].push_back(static_cast<Color>(c));
    });
    total += static_cast<int>(edge_colors[static_cast<std::size_t>(e)].size());
  }
  auto trial_of = [&](int e, Color c) {
    const auto& cs = edge_colors[static_cast<std::size_t>(e)];
    auto it = std::lower_bound(cs.begin(), cs.end(), c);
    return offset[static_cast<std::size_t>(e)] + static_cast<int>(it - cs.begin());
  };

  lll::VariableSpace space;
  for (int i = 0; i < total; ++i) space.add_bernoulli(cfg.p_sparsify);

  std::vector<lll::BadEvent> events;
  // A(e): sparsified list too small
  if (cfg.theta_sparse_list > 0) {
    for (int e = 0; e < g.edge_count(); ++e) {
      int lo = offset[static_cast<std::size_t>(e)];
      int hi = lo + static_cast<int>(edge_colors[static_cast<std::size_t>(e)].size());
      std::vector<int> scope(static_cast<std::size_t>(hi - lo));
      std::iota(scope.begin(), scope.end(), lo);
      events.push_back({"A_" + std::to_string(e), std::move(scope),
                        [lo, hi, th = cfg.theta_sparse_list](const lll::Assignment& a) {
                          int kept = 0;
                          for (int t = lo; t < hi; ++t) kept += a[static_cast<std::size_t>(t)];
                          return kept < th;
                        }});
    }
  }
  // B(v,c): sparsified color degree too large; pairs that cannot exceed the
  // threshold are skipped up front
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::map<Color, std::vector<int>> by_color;
    for (const auto& [w, e] : g.neighbors(v))
      L.list(e).for_each([&](std::size_t c) {
        by_color[static_cast<Color>(c)].push_back(trial_of(e, static_cast<Color>(c)));
      });
    for (auto& [c, ts] : by_color) {
      if (static_cast<double>(ts.size()) <= cfg.theta_color_degree) continue;
      const auto scope = ts;
      events.push_back({"B_" + std::to_string(v) + "_" + std::to_string(c), scope,
                        [scope, th = cfg.theta_color_degree](const lll::Assignment& a) {
                          int deg = 0;
                          for (int t : scope) deg += a[static_cast<std::size_t>(t)];
                          return deg > th;
                        }});
    }
  }
  // D(C,c): a short cycle keeps c on all of its edges
  for (const auto& cyc : short_cycles(g, cfg.q_eff - 1)) {
    Bitset common = L.list(cyc.front());
    for (int e : cyc) common &= L.list(e);
    common.for_each([&](std::size_t c) {
      std::vector<int> scope;
      scope.reserve(cyc.size());
      for (int e : cyc) scope.push_back(trial_of(e, static_cast<Color>(c)));
      events.push_back({"D_c" + std::to_string(c) + "_len" + std::to_string(cyc.size()),
                        scope, [scope](const lll::Assignment& a) {
                          for (int t : scope)
                            if (!a[static_cast<std::size_t>(t)]) return false;
                          return true;
                        }});
    });
  }

  auto out = lll::resample_until_clear(space, events, cfg.max_rounds,
                                       Rng::derive(cfg.seed, kSparsifyStream), cfg.rule);
  if (!out.success) throw_budget("sparsify", events, out);
  if (resamples != nullptr) *resamples = out.resamples;

  ListAssignment kept(g, L.palette());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& cs = edge_colors[static_cast<std::size_t>(e)];
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (out.assignment[static_cast<std::size_t>(offset[static_cast<std::size_t>(e)]) + i])
        kept.add(e, cs[i]);
  }

  // girth of every color's support must now clear q_eff
  std::map<Color, EdgeSubset> support;
  for (int e = 0; e < g.edge_count(); ++e)
    kept.list(e).for_each([&](std::size_t c) {
      auto [it, fresh] =
          support.try_emplace(static_cast<Color>(c), static_cast<std::size_t>(g.edge_count()));
      it->second.set(static_cast<std::size_t>(e));
    });
  for (const auto& [c, view] : support) {
    int gi = girth(g, &view);
    if (gi < cfg.q_eff)
      throw Error(Errc::verification_failed, "sparsify left color " + std::to_string(c) +
                                                 " with support girth " + std::to_string(gi));
  }
  return kept;
}

// ---------------------------------------------------------------------------
// list_edge_color

namespace {

struct GreedyState {
  std::vector<Bitset> used;  // per vertex, colors on incident edges
  std::vector<int> usage;    // per color, global use count
  EdgeColoring coloring;

  GreedyState(const Graph& g, int palette)
      : used(static_cast<std::size_t>(g.vertex_count()), Bitset(static_cast<std::size_t>(palette))),
        usage(static_cast<std::size_t>(palette), 0),
        coloring(g.edge_count()) {}

  void assign(const Graph& g, int e, Color c) {
    auto [u, v] = g.edge(e);
    coloring.set(e, c);
    used[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(c));
    used[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(c));
    ++usage[static_cast<std::size_t>(c)];
  }

  void drop(const Graph& g, int e) {
    Color c = coloring.at(e);
    if (c == kUncolored) return;
    coloring.unset(e);
    --usage[static_cast<std::size_t>(c)];
    auto [u, v] = g.edge(e);
    // a vertex may still see c on another incident edge
    auto still_used = [&](int x) {
      for (const auto& [w, f] : g.neighbors(x))
        if (coloring.at(f) == c) return true;
      return false;
    };
    if (!still_used(u)) used[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(c));
    if (!still_used(v)) used[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(c));
  }
};

constexpr int kExhaustiveEdgeLimit = 20;

}  // namespace

EdgeColoring list_edge_color(const Graph& g, const ListAssignment& L, const PipelineConfig& cfg) {
  cfg.validate();
  const int m = g.edge_count();
  if (m == 0) return EdgeColoring(0);
  for (int e = 0; e < m; ++e)
    if (L.list(e).none()) throw Error(Errc::infeasible, "edge " + std::to_string(e) + " has an empty list");

  Rng rng(Rng::derive(cfg.seed, kColorStream));
  std::uint64_t budget = cfg.max_rounds * static_cast<std::uint64_t>(m);
  const int heuristic_attempts_cap = m <= kExhaustiveEdgeLimit ? 4 : INT_MAX;

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);

  for (int attempt = 0; attempt < heuristic_attempts_cap && budget > 0; ++attempt) {
    // random edge order
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[static_cast<std::size_t>(rng.bounded(i))]);

    GreedyState st(g, L.palette());
    std::vector<int> open;
    for (int e : order) {
      if (budget == 0) break;
      --budget;
      auto [u, v] = g.edge(e);
      Bitset avail = Bitset::diff2(L.list(e), st.used[static_cast<std::size_t>(u)],
                                   st.used[static_cast<std::size_t>(v)]);
      Color best = kUncolored;
      avail.for_each([&](std::size_t c) {
        if (best == kUncolored ||
            st.usage[c] < st.usage[static_cast<std::size_t>(best)])
          best = static_cast<Color>(c);
      });
      if (best == kUncolored)
        open.push_back(e);
      else
        st.assign(g, e, best);
    }

    // conflict repair: recolor an open edge, evicting whatever blocks it
    std::uint64_t repair_steps = 8ULL * static_cast<std::uint64_t>(m) + 32;
    while (!open.empty() && repair_steps > 0 && budget > 0) {
      --repair_steps;
      --budget;
      int e = open.back();
      open.pop_back();
      auto [u, v] = g.edge(e);
      Bitset avail = Bitset::diff2(L.list(e), st.used[static_cast<std::size_t>(u)],
                                   st.used[static_cast<std::size_t>(v)]);
      if (avail.any()) {
        Color best = kUncolored;
        avail.for_each([&](std::size_t c) {
          if (best == kUncolored || st.usage[c] < st.usage[static_cast<std::size_t>(best)])
            best = static_cast<Color>(c);
        });
        st.assign(g, e, best);
        continue;
      }
      // force a random list color and push the conflicting edges back out
      const auto options = L.list(e).to_vector();
      Color c = static_cast<Color>(options[rng.bounded(options.size())]);
      for (int x : {u, v})
        for (const auto& [w, f] : g.neighbors(x))
          if (f != e && st.coloring.at(f) == c) {
            st.drop(g, f);
            open.push_back(f);
          }
      st.assign(g, e, c);
    }

    if (open.empty() && st.coloring.total()) {
      VerifyReport proper = check_proper(g, st.coloring);
      VerifyReport listed = check_from_lists(g, L, st.coloring);
      if (proper.pass && listed.pass) return st.coloring;
    }
  }

  if (m <= kExhaustiveEdgeLimit) {
    SearchBudget sb;
    sb.node_limit = std::max<std::uint64_t>(cfg.max_rounds * 4096, 1u << 22);
    sb.time_limit_s = 30.0;
    DecideResult r = decide_degree_t_colorable(g, L, 1, sb);
    if (r.verdict == Feasibility::yes) return *r.witness;
    if (r.verdict == Feasibility::no)
      throw Error(Errc::infeasible, "no proper coloring exists for these lists");
  }
  throw Error(Errc::round_budget_exhausted, "list coloring budget exhausted");
}

// ---------------------------------------------------------------------------
// degree_two_coloring

EdgeColoring degree_two_coloring(const Graph& g, const ListAssignment& L,
                                 const PipelineConfig& cfg) {
  ListAssignment doubled = copy_colors(L, 2);
  EdgeColoring copied = list_edge_color(g, doubled, cfg);
  EdgeColoring merged = merge_colors(copied, 2);
  VerifyReport deg = check_degree_t(g, merged, 2);
  VerifyReport listed = check_from_lists(g, L, merged);
  if (!deg.pass || !listed.pass)
    throw Error(Errc::verification_failed, "merged coloring failed its contract");
  return merged;
}

// ---------------------------------------------------------------------------
// break_cycles

CycleBreakPlan break_cycles(const Graph& g, const ListAssignment& reserve,
                            const std::vector<std::vector<int>>& cycles,
                            const PipelineConfig& cfg) {
  cfg.validate();
  EdgeSubset seen(static_cast<std::size_t>(g.edge_count()));
  for (const auto& cyc : cycles) {
    if (cyc.size() < 3)
      throw Error(Errc::invalid_params, "cycle shorter than 3 edges");
    for (int e : cyc) {
      if (seen.test(static_cast<std::size_t>(e)))
        throw Error(Errc::invalid_params, "cycles are not edge-disjoint");
      seen.set(static_cast<std::size_t>(e));
    }
  }

  CycleBreakPlan plan{{}, {}, EdgeSubset(static_cast<std::size_t>(g.edge_count())), 0};
  if (cycles.empty()) return plan;
  if (cfg.q_eff > 64)
    throw Error(Errc::invalid_params, "choice windows wider than 64 edges are unsupported");

  lll::VariableSpace space;
  for (const auto& cyc : cycles) {
    std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(cfg.q_eff), cyc.size());
    plan.windows.emplace_back(cyc.begin(), cyc.begin() + static_cast<long>(w));
    space.add_uniform(static_cast<std::uint32_t>(w));
  }

  // contributions[(v,c)]: per cycle, the positions of window edges incident
  // to v whose reserve list holds c
  std::map<std::pair<int, Color>, std::map<int, std::uint64_t>> contributions;
  for (std::size_t ci = 0; ci < plan.windows.size(); ++ci) {
    const auto& window = plan.windows[ci];
    for (std::size_t j = 0; j < window.size(); ++j) {
      int e = window[j];
      auto [u, v] = g.edge(e);
      reserve.list(e).for_each([&](std::size_t c) {
        for (int x : {u, v})
          contributions[{x, static_cast<Color>(c)}][static_cast<int>(ci)] |= std::uint64_t{1} << j;
      });
    }
  }

  std::vector<lll::BadEvent> events;
  for (const auto& [vc, per_cycle] : contributions) {
    if (static_cast<double>(per_cycle.size()) <= cfg.theta_hitting) continue;  // cannot fire
    std::vector<std::pair<int, std::uint64_t>> terms(per_cycle.begin(), per_cycle.end());
    std::vector<int> scope;
    scope.reserve(terms.size());
    for (const auto& [ci, mask] : terms) scope.push_back(ci);
    events.push_back({"A_v" + std::to_string(vc.first) + "_c" + std::to_string(vc.second),
                      std::move(scope),
                      [terms, th = cfg.theta_hitting](const lll::Assignment& a) {
                        double deg = 0;
                        for (const auto& [ci, mask] : terms)
                          deg += (mask >> a[static_cast<std::size_t>(ci)]) & 1u;
                        return deg > th;
                      }});
  }

  auto out = lll::resample_until_clear(space, events, cfg.max_rounds,
                                       Rng::derive(cfg.seed, kBreakStream), cfg.rule);
  if (!out.success) throw_budget("break", events, out);
  plan.resamples = out.resamples;

  for (std::size_t ci = 0; ci < plan.windows.size(); ++ci) {
    int e = plan.windows[ci][out.assignment[ci]];
    plan.chosen.push_back(e);
    plan.hitting.set(static_cast<std::size_t>(e));
  }
  return plan;
}

// ---------------------------------------------------------------------------
// recolor_and_merge

EdgeColoring recolor_and_merge(const Graph& g, const EdgeColoring& phi,
                               const ListAssignment& phi_lists, const EdgeSubset& hitting,
                               const ListAssignment& reserve, const PipelineConfig& cfg,
                               const ListAssignment* full_lists) {
  // every monochromatic cycle of phi must meet the hitting set
  for (const auto& [c, cyc] : monochromatic_cycles(g, phi)) {
    bool hit = false;
    for (int e : cyc) hit = hit || hitting.test(static_cast<std::size_t>(e));
    if (!hit)
      throw Error(Errc::invalid_params,
                  "hitting set misses a monochromatic cycle in color " + std::to_string(c));
  }
  // the reserve palette and the palette phi draws on must not meet at any vertex
  if (reserve.palette() != phi_lists.palette())
    throw Error(Errc::invalid_params, "reserve and base lists use different palettes");
  for (int v = 0; v < g.vertex_count(); ++v) {
    Bitset res(static_cast<std::size_t>(reserve.palette()));
    Bitset base(static_cast<std::size_t>(phi_lists.palette()));
    for (const auto& [w, e] : g.neighbors(v)) {
      res |= reserve.list(e);
      base |= phi_lists.list(e);
    }
    if (res.intersects(base))
      throw Error(Errc::invalid_params,
                  "reserve and base palettes overlap at vertex " + std::to_string(v));
  }

  // proper-color the hitting subgraph from its reserve lists
  std::vector<std::pair<int, int>> sub_edges;
  std::vector<int> back;  // sub edge -> original edge
  hitting.for_each([&](std::size_t e) {
    auto [u, v] = g.edge(static_cast<int>(e));
    sub_edges.emplace_back(u, v);
    back.push_back(static_cast<int>(e));
  });
  Graph h(g.vertex_count(), sub_edges);
  ListAssignment sub_lists(h, reserve.palette());
  for (int se = 0; se < h.edge_count(); ++se)
    sub_lists.list(se) = reserve.list(back[static_cast<std::size_t>(se)]);
  EdgeColoring recolored = list_edge_color(h, sub_lists, cfg);

  EdgeColoring psi = phi;
  for (int se = 0; se < h.edge_count(); ++se)
    psi.set(back[static_cast<std::size_t>(se)], recolored.at(se));

  VerifyReport rep = check_linear(g, full_lists, psi);
  if (!rep.pass)
    throw Error(Errc::verification_failed,
                "recolored overlay is not linear: " + rep.violations.front().describe(g));
  return psi;
}

// ---------------------------------------------------------------------------
// solve

SolveResult solve(const Graph& g, const ListAssignment& L, const PipelineConfig& cfg) {
  cfg.validate();
  Strategy strat = cfg.strategy;
  if (strat == Strategy::automatic)
    strat = g.edge_count() <= cfg.direct_cutoff ? Strategy::direct : Strategy::pipeline;

  SolveResult result;
  auto certify = [&](const EdgeColoring& psi) {
    VerifyReport rep = check_linear(g, &L, psi);
    if (!rep.pass)
      throw Error(Errc::verification_failed,
                  "solver produced an uncertified coloring: " + rep.violations.front().describe(g));
    result.coloring = psi;
  };

  if (strat == Strategy::direct) {
    SearchBudget budget;
    budget.node_limit = std::max<std::uint64_t>(cfg.max_rounds * 65536, 1u << 24);
    DecideResult r = decide_linear_colorable(g, L, budget);
    switch (r.verdict) {
      case Feasibility::yes:
        certify(*r.witness);
        return result;
      case Feasibility::no:
        result.failed_stage = "direct";
        result.cause = "Infeasible";
        return result;
      case Feasibility::budget_exceeded:
        result.failed_stage = "direct";
        result.cause = "BudgetExceeded";
        return result;
    }
  }

  std::string stage = "reserve";
  try {
    ReserveSplit split = reserve_colors(g, L, cfg);
    result.stages.push_back({"reserve", split.resamples});

    stage = "sparsify";
    std::uint64_t sparsify_resamples = 0;
    ListAssignment sparse = sparsify_high_girth(g, split.residual, cfg, &sparsify_resamples);
    result.stages.push_back({"sparsify", sparsify_resamples});

    stage = "degree2color";
    EdgeColoring phi = degree_two_coloring(g, sparse, cfg);

    auto cycles_with_colors = monochromatic_cycles(g, phi);
    if (cycles_with_colors.empty()) {
      certify(phi);
      return result;
    }

    stage = "break";
    std::vector<std::vector<int>> cycles;
    cycles.reserve(cycles_with_colors.size());
    for (auto& [c, cyc] : cycles_with_colors) cycles.push_back(std::move(cyc));
    CycleBreakPlan plan = break_cycles(g, split.reserve, cycles, cfg);
    result.stages.push_back({"break", plan.resamples});

    stage = "recolor";
    EdgeColoring psi =
        recolor_and_merge(g, phi, sparse, plan.hitting, split.reserve, cfg, &L);
    certify(psi);
    return result;
  } catch (const Error& err) {
    if (err.kind() == Errc::round_budget_exhausted || err.kind() == Errc::infeasible) {
      result.failed_stage = stage;
      result.cause = err.what();
      return result;
    }
    throw;  // verification failures and precondition bugs must surface
  }
}

}  // namespace linforest
