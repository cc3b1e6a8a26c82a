#include "linforest/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "linforest/rng.hpp"

namespace linforest {

GraphFamily parse_family(const std::string& name) {
  if (name == "complete") return GraphFamily::complete;
  if (name == "complete-bipartite") return GraphFamily::complete_bipartite;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "path") return GraphFamily::path;
  if (name == "random-regular") return GraphFamily::random_regular;
  throw Error(Errc::invalid_params, "unknown graph family '" + name + "'");
}

ListMode parse_list_mode(const std::string& name) {
  if (name == "identical") return ListMode::identical;
  if (name == "uniform") return ListMode::uniform;
  if (name == "adversarial-shared") return ListMode::adversarial_shared;
  throw Error(Errc::invalid_params, "unknown list mode '" + name + "'");
}

namespace {

// Pairing model over n*d stubs. Whole-pairing rejection has acceptance
// probability around exp(-(d-1)/2 - (d-1)^2/4), hopeless already at d=8, so
// each stub is paired with a uniformly random legal partner instead and the
// attempt restarts when a stub has no legal partner left.
Graph random_regular(int n, int d, std::uint64_t seed) {
  if (d < 0 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
    throw Error(Errc::invalid_params, "random-regular needs d < n and n*d even");
  Rng rng(Rng::derive(seed, 0xE6));

  constexpr int kMaxAttempts = 10000;
  std::vector<int> stubs;
  std::vector<int> legal;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) stubs.push_back(v);
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    while (!stubs.empty() && ok) {
      std::size_t ai = static_cast<std::size_t>(rng.bounded(stubs.size()));
      int a = stubs[ai];
      stubs[ai] = stubs.back();
      stubs.pop_back();
      legal.clear();
      for (std::size_t i = 0; i < stubs.size(); ++i) {
        int b = stubs[i];
        auto key = std::minmax(a, b);
        if (a != b && edges.find(key) == edges.end()) legal.push_back(static_cast<int>(i));
      }
      if (legal.empty()) {
        ok = false;
        break;
      }
      std::size_t bi =
          static_cast<std::size_t>(legal[static_cast<std::size_t>(rng.bounded(legal.size()))]);
      int b = stubs[bi];
      stubs[bi] = stubs.back();
      stubs.pop_back();
      edges.insert(std::minmax(a, b));
    }
    if (!ok) continue;
    std::vector<std::pair<int, int>> pairs(edges.begin(), edges.end());
    return Graph(n, pairs);
  }
  throw Error(Errc::generation_failed,
              "pairing model rejected 10^4 times for n=" + std::to_string(n) +
                  " d=" + std::to_string(d));
}

}  // namespace

Graph gen_graph(GraphFamily family, const FamilyParams& params, std::uint64_t seed) {
  std::vector<std::pair<int, int>> pairs;
  switch (family) {
    case GraphFamily::complete: {
      if (params.n < 1) throw Error(Errc::invalid_params, "complete needs n >= 1");
      for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v) pairs.emplace_back(u, v);
      return Graph(params.n, pairs);
    }
    case GraphFamily::complete_bipartite: {
      if (params.a < 1 || params.b < 1)
        throw Error(Errc::invalid_params, "complete-bipartite needs a,b >= 1");
      for (int u = 0; u < params.a; ++u)
        for (int v = 0; v < params.b; ++v) pairs.emplace_back(u, params.a + v);
      return Graph(params.a + params.b, pairs);
    }
    case GraphFamily::cycle: {
      if (params.n < 3) throw Error(Errc::invalid_params, "cycle needs n >= 3");
      for (int v = 0; v < params.n; ++v) pairs.emplace_back(v, (v + 1) % params.n);
      return Graph(params.n, pairs);
    }
    case GraphFamily::path: {
      if (params.n < 1) throw Error(Errc::invalid_params, "path needs n >= 1");
      for (int v = 0; v + 1 < params.n; ++v) pairs.emplace_back(v, v + 1);
      return Graph(params.n, pairs);
    }
    case GraphFamily::random_regular:
      return random_regular(params.n, params.degree, seed);
  }
  throw Error(Errc::invalid_params, "unknown graph family");
}

namespace {

// k distinct colors from {1..palette}
std::vector<Color> draw_subset(int k, int palette, Rng& rng) {
  std::vector<Color> pool(static_cast<std::size_t>(palette));
  std::iota(pool.begin(), pool.end(), 1);
  for (int i = 0; i < k; ++i) {
    std::size_t j = static_cast<std::size_t>(i) +
                    static_cast<std::size_t>(rng.bounded(static_cast<std::uint64_t>(palette - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

}  // namespace

ListAssignment gen_lists(const Graph& g, int k, int palette, ListMode mode, std::uint64_t seed) {
  if (k < 0 || palette < 0 || k > palette)
    throw Error(Errc::invalid_params,
                "need 0 <= k <= palette, got k=" + std::to_string(k) + " palette=" +
                    std::to_string(palette));
  ListAssignment L(g, palette + 1);  // tokens 1..palette
  Rng rng(Rng::derive(seed, 0x715));
  switch (mode) {
    case ListMode::identical:
      for (int e = 0; e < g.edge_count(); ++e)
        for (Color c = 1; c <= k; ++c) L.add(e, c);
      break;
    case ListMode::uniform:
      for (int e = 0; e < g.edge_count(); ++e)
        for (Color c : draw_subset(k, palette, rng)) L.add(e, c);
      break;
    case ListMode::adversarial_shared: {
      // per-vertex pools; an edge leans on both endpoint pools so incident
      // edges collide on colors as much as possible
      std::vector<std::vector<Color>> pool(static_cast<std::size_t>(g.vertex_count()));
      for (int v = 0; v < g.vertex_count(); ++v)
        pool[static_cast<std::size_t>(v)] = draw_subset(k, palette, rng);
      for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        std::set<Color> list;
        const auto& pu = pool[static_cast<std::size_t>(u)];
        const auto& pv = pool[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < pu.size() && static_cast<int>(list.size()) < (k + 1) / 2; ++i)
          list.insert(pu[i]);
        for (std::size_t i = 0; i < pv.size() && static_cast<int>(list.size()) < k; ++i)
          list.insert(pv[i]);
        for (std::size_t i = 0; i < pu.size() && static_cast<int>(list.size()) < k; ++i)
          list.insert(pu[i]);
        while (static_cast<int>(list.size()) < k)
          list.insert(static_cast<Color>(1 + rng.bounded(static_cast<std::uint64_t>(palette))));
        for (Color c : list) L.add(e, c);
      }
      break;
    }
  }
  return L;
}

}  // namespace linforest
