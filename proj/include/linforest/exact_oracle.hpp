#pragma once

#include <cstdint>
#include <optional>

#include "linforest/color_model.hpp"
#include "linforest/graph.hpp"

namespace linforest {

struct SearchBudget {
  std::uint64_t node_limit = 200'000'000;
  double time_limit_s = 60.0;
};

enum class Feasibility { yes, no, budget_exceeded };

struct DecideResult {
  Feasibility verdict;
  std::optional<EdgeColoring> witness;  // present iff verdict == yes
  std::uint64_t nodes = 0;
};

// Exhaustive backtracking over edge colorings. Yes comes with a witness that
// passes check_linear; No means the whole space was pruned away. Edges are
// tried in descending degree-sum order; branches are cut when a vertex would
// meet a color three times or a color class would close a cycle (tracked by
// one union-find per color with rollback). Identical lists are detected and
// searched up to color relabeling.
DecideResult decide_linear_colorable(const Graph& g, const ListAssignment& L,
                                     const SearchBudget& budget = {});

// Same search with the linear-forest constraint relaxed to max degree <= t
// per color class (no acyclicity).
DecideResult decide_degree_t_colorable(const Graph& g, const ListAssignment& L, int t,
                                       const SearchBudget& budget = {});

// Least k such that k identical lists admit a linear coloring.
// nullopt when the budget ran out before the threshold was pinned down.
std::optional<int> linear_arboricity(const Graph& g, const SearchBudget& budget = {});

// Least k such that k identical colors admit a degree-t coloring.
std::optional<int> chromatic_index_t(const Graph& g, int t, const SearchBudget& budget = {});

struct AllListsResult {
  Feasibility verdict;
  // a non-colorable assignment, present iff verdict == no
  std::optional<ListAssignment> counterexample;
  std::uint64_t assignments_checked = 0;
};

// Is every assignment of k-subsets linearly colorable? Quantifies over a
// universe of k*|E| colors, which is enough: only the intersection pattern
// of the lists matters, and any assignment uses at most k colors per edge,
// so relabeling by first appearance (edges scanned in index order) maps it
// into the enumerated canonical family. Intended for |E| <= 5.
AllListsResult list_linear_colorable_all_lists(const Graph& g, int k,
                                               const SearchBudget& budget = {});

}  // namespace linforest
