#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "linforest/color_model.hpp"
#include "linforest/graph.hpp"

namespace linforest {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::io_error, "cannot open " + path);
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(Errc::io_error, "cannot write " + path);
  return f;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw Error(Errc::format_error, "missing header line");
  std::istringstream hdr(line);
  long long n = -1, m = -1;
  if (!(hdr >> n >> m) || n < 0 || m < 0)
    throw Error(Errc::format_error, "bad header line: " + line);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      throw Error(Errc::format_error, "expected " + std::to_string(m) + " edges, got " +
                                          std::to_string(i));
    std::istringstream es(line);
    int u, v;
    if (!(es >> u >> v)) throw Error(Errc::format_error, "bad edge line: " + line);
    if (!(0 <= u && u < v && v < n))
      throw Error(Errc::format_error, "edge line must satisfy 0 <= u < v < n: " + line);
    pairs.emplace_back(u, v);
  }
  try {
    return Graph(static_cast<int>(n), pairs);
  } catch (const Error& e) {
    throw Error(Errc::format_error, e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (u > v) std::swap(u, v);
    out << u << ' ' << v << '\n';
  }
}

ListAssignment read_lists(std::istream& in, const Graph& g) {
  std::vector<std::vector<Color>> per_edge(static_cast<std::size_t>(g.edge_count()));
  std::vector<char> filled(static_cast<std::size_t>(g.edge_count()), 0);
  Color max_color = -1;
  std::string line;
  int lines = 0;
  while (next_data_line(in, line)) {
    std::istringstream ls(line);
    int u, v;
    std::string colon;
    if (!(ls >> u >> v >> colon) || colon != ":")
      throw Error(Errc::format_error, "bad list line: " + line);
    int e = g.edge_index(u, v);
    if (e < 0)
      throw Error(Errc::format_error,
                  "list line names a non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (filled[static_cast<std::size_t>(e)])
      throw Error(Errc::format_error, "duplicate list line for edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
    filled[static_cast<std::size_t>(e)] = 1;
    Color c;
    while (ls >> c) {
      if (c < 0) throw Error(Errc::format_error, "negative color in: " + line);
      per_edge[static_cast<std::size_t>(e)].push_back(c);
      max_color = std::max(max_color, c);
    }
    ++lines;
  }
  if (lines != g.edge_count())
    throw Error(Errc::format_error, "list file covers " + std::to_string(lines) + " of " +
                                        std::to_string(g.edge_count()) + " edges");
  ListAssignment L(g, max_color + 1);
  for (int e = 0; e < g.edge_count(); ++e)
    for (Color c : per_edge[static_cast<std::size_t>(e)]) L.add(e, c);
  return L;
}

void write_lists(std::ostream& out, const ListAssignment& L) {
  const Graph& g = L.graph();
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (u > v) std::swap(u, v);
    out << u << ' ' << v << " :";
    L.list(e).for_each([&](std::size_t c) { out << ' ' << c; });
    out << '\n';
  }
}

EdgeColoring read_coloring(std::istream& in, const Graph& g) {
  EdgeColoring phi(g.edge_count());
  std::vector<char> filled(static_cast<std::size_t>(g.edge_count()), 0);
  std::string line;
  while (next_data_line(in, line)) {
    std::istringstream ls(line);
    int u, v;
    Color c;
    if (!(ls >> u >> v >> c)) throw Error(Errc::format_error, "bad coloring line: " + line);
    int e = g.edge_index(u, v);
    if (e < 0)
      throw Error(Errc::format_error, "coloring line names a non-edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
    if (filled[static_cast<std::size_t>(e)])
      throw Error(Errc::format_error, "duplicate coloring line for edge (" + std::to_string(u) +
                                          "," + std::to_string(v) + ")");
    if (c < 0) throw Error(Errc::format_error, "negative color in: " + line);
    filled[static_cast<std::size_t>(e)] = 1;
    phi.set(e, c);
  }
  return phi;
}

void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& phi) {
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!phi.colored(e)) continue;
    auto [u, v] = g.edge(e);
    if (u > v) std::swap(u, v);
    out << u << ' ' << v << ' ' << phi.at(e) << '\n';
  }
}

Graph read_graph_file(const std::string& path) {
  auto f = open_in(path);
  return read_graph(f);
}

void write_graph_file(const std::string& path, const Graph& g) {
  auto f = open_out(path);
  write_graph(f, g);
}

ListAssignment read_lists_file(const std::string& path, const Graph& g) {
  auto f = open_in(path);
  return read_lists(f, g);
}

void write_lists_file(const std::string& path, const ListAssignment& L) {
  auto f = open_out(path);
  write_lists(f, L);
}

EdgeColoring read_coloring_file(const std::string& path, const Graph& g) {
  auto f = open_in(path);
  return read_coloring(f, g);
}

void write_coloring_file(const std::string& path, const Graph& g, const EdgeColoring& phi) {
  auto f = open_out(path);
  write_coloring(f, g, phi);
}

}  // namespace linforest
