#include "linforest/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace linforest {

Graph::Graph(int vertex_count, std::span<const std::pair<int, int>> pairs) {
  if (vertex_count < 0)
    throw Error(Errc::invalid_params, "vertex count must be non-negative");
  n_ = vertex_count;
  adj_.resize(static_cast<std::size_t>(n_));
  edges_.reserve(pairs.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw Error(Errc::vertex_out_of_range,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" +
                      std::to_string(n_));
    if (a == b) throw Error(Errc::self_loop, "edge (" + std::to_string(a) + "," + std::to_string(a) + ")");
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second)
      throw Error(Errc::duplicate_edge,
                  "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    int e = static_cast<int>(edges_.size());
    edges_.push_back({a, b});
    adj_[static_cast<std::size_t>(a)].emplace_back(b, e);
    adj_[static_cast<std::size_t>(b)].emplace_back(a, e);
  }
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
  for (const auto& [w, e] : adj_[static_cast<std::size_t>(u)])
    if (w == v) return e;
  return -1;
}

Graph build_graph(int vertex_count, std::span<const std::pair<int, int>> pairs) {
  return Graph(vertex_count, pairs);
}

namespace {

inline bool in_view(const EdgeSubset* view, int e) {
  return view == nullptr || view->test(static_cast<std::size_t>(e));
}

}  // namespace

int max_degree(const Graph& g, const EdgeSubset* view) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = 0;
    for (const auto& [w, e] : g.neighbors(v))
      if (in_view(view, e)) ++d;
    best = std::max(best, d);
  }
  return best;
}

// BFS from every vertex; for each non-tree edge (u,w) seen from the later
// endpoint, dist[u]+dist[w]+1 bounds a cycle through the root, and the
// minimum over all roots is exact for unweighted graphs.
int girth(const Graph& g, const EdgeSubset* view) {
  const int n = g.vertex_count();
  int best = kInfiniteGirth;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent_edge(static_cast<std::size_t>(n));
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    queue.clear();
    queue.push_back(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (2 * dist[static_cast<std::size_t>(u)] >= best) continue;
      for (const auto& [w, e] : g.neighbors(u)) {
        if (!in_view(view, e)) continue;
        if (dist[static_cast<std::size_t>(w)] == -1) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent_edge[static_cast<std::size_t>(w)] = e;
          queue.push_back(w);
        } else if (e != parent_edge[static_cast<std::size_t>(u)]) {
          best = std::min(best,
                          dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  return best;
}

bool is_linear_forest(const Graph& g, const EdgeSubset* view) {
  return max_degree(g, view) <= 2 && girth(g, view) == kInfiniteGirth;
}

std::vector<std::vector<int>> cycles_of_degree2_subgraph(const Graph& g, const EdgeSubset& view) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    int d = 0;
    for (const auto& [w, e] : g.neighbors(v))
      if (view.test(static_cast<std::size_t>(e))) ++d;
    if (d > 2)
      throw Error(Errc::degree_exceeds_two, "vertex " + std::to_string(v) + " has view degree " +
                                                std::to_string(d));
  }

  std::vector<std::vector<int>> cycles;
  std::vector<char> edge_done(static_cast<std::size_t>(g.edge_count()), 0);

  // Mark every edge reachable from a degree-1 endpoint: those lie on paths.
  for (int v = 0; v < n; ++v) {
    int d = 0, start_edge = -1;
    for (const auto& [w, e] : g.neighbors(v))
      if (view.test(static_cast<std::size_t>(e))) {
        ++d;
        start_edge = e;
      }
    if (d != 1 || edge_done[static_cast<std::size_t>(start_edge)]) continue;
    int cur = v, e = start_edge;
    while (e != -1 && !edge_done[static_cast<std::size_t>(e)]) {
      edge_done[static_cast<std::size_t>(e)] = 1;
      cur = g.other_end(e, cur);
      int next = -1;
      for (const auto& [w, f] : g.neighbors(cur))
        if (f != e && view.test(static_cast<std::size_t>(f))) next = f;
      e = next;
    }
  }

  // Remaining view edges all lie on cycles; walk each once.
  for (int e0 = 0; e0 < g.edge_count(); ++e0) {
    if (!view.test(static_cast<std::size_t>(e0)) || edge_done[static_cast<std::size_t>(e0)])
      continue;
    std::vector<int> cycle;
    int start = g.edge(e0).u;
    int cur = start, e = e0;
    do {
      cycle.push_back(e);
      edge_done[static_cast<std::size_t>(e)] = 1;
      cur = g.other_end(e, cur);
      int next = -1;
      for (const auto& [w, f] : g.neighbors(cur))
        if (f != e && view.test(static_cast<std::size_t>(f)) &&
            !edge_done[static_cast<std::size_t>(f)])
          next = f;
      if (next == -1) break;
      e = next;
    } while (true);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace linforest
