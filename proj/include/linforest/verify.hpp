#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linforest/color_model.hpp"
#include "linforest/graph.hpp"

namespace linforest {

enum class ViolationKind {
  uncolored_edge,
  color_not_in_list,
  degree_exceeded,   // (vertex, color) with too many edges of that color
  monochromatic_cycle,
};

struct Violation {
  ViolationKind kind;
  int edge = -1;
  int vertex = -1;
  Color color = kUncolored;
  std::vector<int> cycle = {};  // edge indices, for monochromatic_cycle

  std::string describe(const Graph& g) const;
};

// A failing report always carries at least one concrete witness.
struct VerifyReport {
  bool pass = true;
  std::vector<Violation> violations;

  explicit operator bool() const { return pass; }
  void add(Violation v) {
    pass = false;
    violations.push_back(std::move(v));
  }
};

// phi(e) in L(e) for every edge.
VerifyReport check_from_lists(const Graph& g, const ListAssignment& L, const EdgeColoring& phi);

// Every color class is a matching.
VerifyReport check_proper(const Graph& g, const EdgeColoring& phi);

// Every color class has maximum degree <= t.
VerifyReport check_degree_t(const Graph& g, const EdgeColoring& phi, int t);

// Every color class is a linear forest; optionally list-respecting too.
VerifyReport check_linear(const Graph& g, const ListAssignment* L, const EdgeColoring& phi);

// All cycles inside color classes of a degree-2 coloring, as (color, cycle)
// pairs. Throws Errc::not_degree_two when phi is not a degree-2 coloring.
std::vector<std::pair<Color, std::vector<int>>> monochromatic_cycles(const Graph& g,
                                                                     const EdgeColoring& phi);

}  // namespace linforest
