#pragma once

#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linforest/bitset.hpp"
#include "linforest/error.hpp"

namespace linforest {

// girth() result for an acyclic (sub)graph.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Simple undirected graph. Vertices are 0..n-1; edges keep their insertion
// index 0..m-1 for the lifetime of the graph, which is what colorings, list
// assignments and edge subsets key on. Immutable after construction.
class Graph {
 public:
  struct Endpoints {
    int u, v;
  };

  Graph() = default;
  Graph(int vertex_count, std::span<const std::pair<int, int>> pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  Endpoints edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

  // (neighbor, edge index) pairs.
  const std::vector<std::pair<int, int>>& neighbors(int v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  // -1 when (u,v) is not an edge.
  int edge_index(int u, int v) const;

  // Endpoint of e other than v.
  int other_end(int e, int v) const {
    const auto& ep = edges_[static_cast<std::size_t>(e)];
    return ep.u == v ? ep.v : ep.u;
  }

 private:
  int n_ = 0;
  std::vector<Endpoints> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

Graph build_graph(int vertex_count, std::span<const std::pair<int, int>> pairs);

// An EdgeSubset is a Bitset whose universe is the parent graph's edge count.
using EdgeSubset = Bitset;

// All structural queries below accept an optional edge mask restricting the
// view to a subgraph; nullptr means the whole graph.

int max_degree(const Graph& g, const EdgeSubset* view = nullptr);

// Length of the shortest cycle in the view, or kInfiniteGirth if acyclic.
int girth(const Graph& g, const EdgeSubset* view = nullptr);

// True iff every vertex has degree <= 2 in the view and the view is acyclic.
bool is_linear_forest(const Graph& g, const EdgeSubset* view = nullptr);

// All cycles of a degree-<=2 view, each as its edge indices in cyclic order.
// Throws Errc::degree_exceeds_two if some vertex has view-degree > 2.
std::vector<std::vector<int>> cycles_of_degree2_subgraph(const Graph& g, const EdgeSubset& view);

// Text format: optional leading '#' comment lines, one "n m" line, then m
// lines "u v" with 0 <= u < v < n. write_graph emits the canonical form
// (no comments, edges in index order), which round-trips bit-exactly.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace linforest
