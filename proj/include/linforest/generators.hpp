#pragma once

#include <cstdint>
#include <string>

#include "linforest/color_model.hpp"
#include "linforest/graph.hpp"

namespace linforest {

enum class GraphFamily { complete, complete_bipartite, cycle, path, random_regular };

GraphFamily parse_family(const std::string& name);  // throws Errc::invalid_params

struct FamilyParams {
  int n = 0;       // complete, cycle, path, random_regular
  int a = 0, b = 0;  // complete_bipartite parts
  int degree = 0;  // random_regular
};

// Deterministic per seed. random_regular uses the pairing model with
// rejection of self-loops and duplicate edges (at most 10^4 attempts, then
// Errc::generation_failed).
Graph gen_graph(GraphFamily family, const FamilyParams& params, std::uint64_t seed);

enum class ListMode { identical, uniform, adversarial_shared };

ListMode parse_list_mode(const std::string& name);  // throws Errc::invalid_params

// identical: every list {1..k}. uniform: independent k-subsets of
// {1..palette}. adversarial_shared: incident edges draw from per-vertex
// pools so shared colors pile up at vertices (drives the color degree
// toward the vertex degree).
ListAssignment gen_lists(const Graph& g, int k, int palette, ListMode mode, std::uint64_t seed);

}  // namespace linforest
