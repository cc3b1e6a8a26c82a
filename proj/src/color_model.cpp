#include "linforest/color_model.hpp"

#include <algorithm>
#include <limits>

namespace linforest {

ListAssignment::ListAssignment(const Graph& g, int palette) : g_(&g), palette_(palette) {
  if (palette < 0) throw Error(Errc::invalid_params, "palette must be non-negative");
  lists_.assign(static_cast<std::size_t>(g.edge_count()), Bitset(static_cast<std::size_t>(palette)));
}

int list_size(const ListAssignment& L) {
  if (L.edge_count() == 0) throw Error(Errc::empty_graph, "list size of an edgeless graph");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (int e = 0; e < L.edge_count(); ++e) best = std::min(best, L.list(e).count());
  return static_cast<int>(best);
}

Bitset vertex_list(const ListAssignment& L, int v) {
  const Graph& g = L.graph();
  if (v < 0 || v >= g.vertex_count())
    throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(v));
  Bitset out(static_cast<std::size_t>(L.palette()));
  for (const auto& [w, e] : g.neighbors(v)) out |= L.list(e);
  return out;
}

int color_degree(const ListAssignment& L, int v, Color c) {
  const Graph& g = L.graph();
  if (v < 0 || v >= g.vertex_count())
    throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(v));
  if (c < 0 || c >= L.palette()) return 0;
  int d = 0;
  for (const auto& [w, e] : g.neighbors(v))
    if (L.list(e).test(static_cast<std::size_t>(c))) ++d;
  return d;
}

int max_color_degree(const ListAssignment& L) {
  const Graph& g = L.graph();
  int best = 0;
  std::vector<int> counts(static_cast<std::size_t>(L.palette()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto& [w, e] : g.neighbors(v))
      L.list(e).for_each([&](std::size_t c) {
        best = std::max(best, ++counts[c]);
      });
  }
  return best;
}

ListAssignment copy_colors(const ListAssignment& L, int t) {
  if (t < 1) throw Error(Errc::invalid_params, "copy factor must be >= 1");
  ListAssignment out(L.graph(), L.palette() * t);
  for (int e = 0; e < L.edge_count(); ++e) {
    L.list(e).for_each([&](std::size_t c) {
      for (int i = 1; i <= t; ++i)
        out.add(e, encode_copied({static_cast<Color>(c), i}, t));
    });
  }
  return out;
}

bool EdgeColoring::total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

EdgeColoring merge_colors(const EdgeColoring& phi, int t) {
  if (t < 1) throw Error(Errc::invalid_params, "copy factor must be >= 1");
  if (!phi.total()) throw Error(Errc::partial_coloring, "merge of a partial coloring");
  EdgeColoring out(phi.edge_count());
  for (int e = 0; e < phi.edge_count(); ++e) out.set(e, decode_copied(phi.at(e), t).base);
  return out;
}

}  // namespace linforest
