#include "linforest/verify.hpp"

#include <algorithm>
#include <map>

namespace linforest {

std::string Violation::describe(const Graph& g) const {
  auto edge_name = [&](int e) {
    auto [u, v] = g.edge(e);
    if (u > v) std::swap(u, v);
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  };
  switch (kind) {
    case ViolationKind::uncolored_edge:
      return "uncolored edge " + edge_name(edge);
    case ViolationKind::color_not_in_list:
      return "edge " + edge_name(edge) + " colored " + std::to_string(color) +
             " which is not in its list";
    case ViolationKind::degree_exceeded:
      return "vertex " + std::to_string(vertex) + " meets color " + std::to_string(color) +
             " on too many edges";
    case ViolationKind::monochromatic_cycle: {
      std::string s = "monochromatic cycle in color " + std::to_string(color) + ":";
      for (int e : cycle) s += " " + edge_name(e);
      return s;
    }
  }
  return "unknown violation";
}

namespace {

bool report_uncolored(const Graph& g, const EdgeColoring& phi, VerifyReport& r) {
  bool any = false;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!phi.colored(e)) {
      r.add({.kind = ViolationKind::uncolored_edge, .edge = e});
      any = true;
    }
  return any;
}

// Each (vertex, color) pair with more than t incident edges of that color.
void report_degree_violations(const Graph& g, const EdgeColoring& phi, int t, VerifyReport& r) {
  std::map<Color, int> counts;
  for (int v = 0; v < g.vertex_count(); ++v) {
    counts.clear();
    for (const auto& [w, e] : g.neighbors(v))
      if (phi.colored(e)) ++counts[phi.at(e)];
    for (const auto& [c, cnt] : counts)
      if (cnt > t) r.add({.kind = ViolationKind::degree_exceeded, .vertex = v, .color = c});
  }
}

// (color, cycle) pairs of a coloring already known to be degree-2.
std::vector<std::pair<Color, std::vector<int>>> collect_monochromatic_cycles(
    const Graph& g, const EdgeColoring& phi) {
  std::map<Color, EdgeSubset> classes;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!phi.colored(e)) continue;
    auto [it, fresh] = classes.try_emplace(phi.at(e), static_cast<std::size_t>(g.edge_count()));
    it->second.set(static_cast<std::size_t>(e));
  }
  std::vector<std::pair<Color, std::vector<int>>> out;
  for (const auto& [c, view] : classes)
    for (auto& cyc : cycles_of_degree2_subgraph(g, view)) out.emplace_back(c, std::move(cyc));
  return out;
}

}  // namespace

VerifyReport check_from_lists(const Graph& g, const ListAssignment& L, const EdgeColoring& phi) {
  VerifyReport r;
  if (report_uncolored(g, phi, r)) return r;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!L.contains(e, phi.at(e)))
      r.add({.kind = ViolationKind::color_not_in_list, .edge = e, .color = phi.at(e)});
  return r;
}

VerifyReport check_proper(const Graph& g, const EdgeColoring& phi) {
  return check_degree_t(g, phi, 1);
}

VerifyReport check_degree_t(const Graph& g, const EdgeColoring& phi, int t) {
  if (t < 1) throw Error(Errc::invalid_params, "degree bound must be >= 1");
  VerifyReport r;
  if (report_uncolored(g, phi, r)) return r;
  report_degree_violations(g, phi, t, r);
  return r;
}

VerifyReport check_linear(const Graph& g, const ListAssignment* L, const EdgeColoring& phi) {
  VerifyReport r;
  if (report_uncolored(g, phi, r)) return r;
  if (L != nullptr)
    for (int e = 0; e < g.edge_count(); ++e)
      if (!L->contains(e, phi.at(e)))
        r.add({.kind = ViolationKind::color_not_in_list, .edge = e, .color = phi.at(e)});
  VerifyReport degree_part;
  report_degree_violations(g, phi, 2, degree_part);
  for (const auto& v : degree_part.violations) r.add(v);
  if (!degree_part.pass) return r;  // cycle walks need view degree <= 2
  for (auto& [c, cyc] : collect_monochromatic_cycles(g, phi))
    r.add({.kind = ViolationKind::monochromatic_cycle, .color = c, .cycle = std::move(cyc)});
  return r;
}

std::vector<std::pair<Color, std::vector<int>>> monochromatic_cycles(const Graph& g,
                                                                     const EdgeColoring& phi) {
  VerifyReport deg2 = check_degree_t(g, phi, 2);
  if (!deg2.pass)
    throw Error(Errc::not_degree_two, deg2.violations.front().describe(g));
  return collect_monochromatic_cycles(g, phi);
}

}  // namespace linforest
