#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "linforest/color_model.hpp"
#include "linforest/graph.hpp"
#include "linforest/lll.hpp"

namespace linforest {

// q(d) = log d / (6 log log d), natural logs.
// Throws Errc::domain_error when log log d <= 0 (d <= e).
double q_of_d(double d);

enum class Strategy { pipeline, direct, automatic };

// Knobs for the randomized coloring pipeline. The defaults fall out of d and
// epsilon; at desk scale they are usually unattainable (the probabilities
// clamp to 1 and the thresholds exceed any real list), so experiments and
// tests override them explicitly.
struct PipelineConfig {
  double d = 16.0;
  double epsilon = 0.5;

  // A default-constructed config enforces nothing: probabilities 1, lower
  // bounds 0, upper bounds infinite. defaults(d, epsilon) fills the formulas.
  int q_eff = 3;                   // effective girth threshold
  double p_reserve = 1.0;          // per-(vertex,color) reserve probability
  double p_sparsify = 1.0;         // per-(edge,color) retention probability
  double theta_reserve = 0.0;      // required |R(e)|
  double theta_residual = 0.0;     // required |L'(e)|
  double theta_sparse_list = 0.0;  // required sparsified list size
  double theta_color_degree = std::numeric_limits<double>::infinity();  // allowed color degree
  double theta_hitting = std::numeric_limits<double>::infinity();  // allowed hitting color degree

  std::uint64_t max_rounds = 20000;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::automatic;
  int direct_cutoff = 24;  // automatic: run the exact search up to this many edges
  lll::SelectionRule rule = lll::SelectionRule::lowest_index;

  // All derived quantities from (d, epsilon); probabilities clamp into [0,1].
  static PipelineConfig defaults(double d, double epsilon);

  // target list size ceil(d/2 (1+epsilon))
  int target_list_size() const;

  void validate() const;
};

// Per-vertex reserve sets and the per-edge palettes they induce:
// reserve(e=uv) = L(e) n R(u) n R(v), residual(e) = L(e) \ (R(u) u R(v)).
struct ReserveSplit {
  std::vector<Bitset> vertex_reserve;
  ListAssignment reserve;
  ListAssignment residual;
  std::uint64_t resamples = 0;
};

// Samples each (v, c) into R(v) with p_reserve and resamples until every
// edge has |reserve(e)| >= theta_reserve and |residual(e)| >= theta_residual.
// Throws Errc::round_budget_exhausted when max_rounds runs out.
ReserveSplit reserve_colors(const Graph& g, const ListAssignment& L, const PipelineConfig& cfg);

// Keeps each (e, c) with p_sparsify and resamples until lists stay above
// theta_sparse_list, color degrees below theta_color_degree, and no cycle
// shorter than q_eff keeps any color on all of its edges, so every color's
// support subgraph has girth >= q_eff.
ListAssignment sparsify_high_girth(const Graph& g, const ListAssignment& L,
                                   const PipelineConfig& cfg,
                                   std::uint64_t* resamples = nullptr);

// Proper coloring from lists: randomized greedy in random edge order taking
// the globally least-used available color, a conflict-repair walk, and an
// exhaustive fallback on instances of at most 20 edges. Throws
// Errc::infeasible (only with exhaustive proof) or round_budget_exhausted.
EdgeColoring list_edge_color(const Graph& g, const ListAssignment& L, const PipelineConfig& cfg);

// Degree-2 coloring via doubled lists: copy_colors(L, 2), proper-color the
// copies, merge back. Monochromatic cycle lengths inherit the girth of the
// per-color supports of L.
EdgeColoring degree_two_coloring(const Graph& g, const ListAssignment& L,
                                 const PipelineConfig& cfg);

struct CycleBreakPlan {
  std::vector<std::vector<int>> windows;  // per cycle: its choice window S(C)
  std::vector<int> chosen;                // per cycle: the picked edge
  EdgeSubset hitting;                     // union of the picked edges
  std::uint64_t resamples = 0;
};

// Picks one edge per cycle, uniformly from the window of its first
// min(q_eff, |C|) edges, and resamples until no (vertex, color) sees more
// than theta_hitting picked edges whose reserve list holds that color.
// Cycles must be pairwise edge-disjoint, each of length >= 3.
CycleBreakPlan break_cycles(const Graph& g, const ListAssignment& reserve,
                            const std::vector<std::vector<int>>& cycles,
                            const PipelineConfig& cfg);

// Recolors the hitting edges from their reserve lists and overlays the rest
// of phi. Preconditions (checked): every monochromatic cycle of phi meets
// the hitting set, and at every vertex the reserve palette is disjoint from
// the palette phi draws on. The result is re-verified with check_linear
// (against full_lists when given); a verifier failure is an internal
// inconsistency and throws Errc::verification_failed.
EdgeColoring recolor_and_merge(const Graph& g, const EdgeColoring& phi,
                               const ListAssignment& phi_lists, const EdgeSubset& hitting,
                               const ListAssignment& reserve, const PipelineConfig& cfg,
                               const ListAssignment* full_lists = nullptr);

struct StageStats {
  std::string stage;
  std::uint64_t resamples = 0;
};

struct SolveResult {
  std::optional<EdgeColoring> coloring;
  std::string failed_stage;  // empty on success
  std::string cause;         // empty on success
  std::vector<StageStats> stages;

  bool success() const { return coloring.has_value(); }
};

// End-to-end solver. Strategy pipeline runs reserve -> sparsify -> degree-2
// color -> break cycles -> recolor; direct runs the exhaustive search;
// automatic picks direct for at most direct_cutoff edges. Every returned
// coloring has passed check_linear against L. Stage failures come back as an
// explicit (stage, cause) pair, never as an uncertified coloring.
SolveResult solve(const Graph& g, const ListAssignment& L, const PipelineConfig& cfg);

}  // namespace linforest
