#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linforest/graph.hpp"

namespace linforest {

// Colors are opaque non-negative integer tokens drawn from a palette
// universe [0, palette). -1 marks an uncolored edge.
using Color = int;
inline constexpr Color kUncolored = -1;

// Per-edge color sets, bound to a graph (which must outlive the assignment).
// Empty lists are legal; verifiers report them as infeasibilities.
class ListAssignment {
 public:
  ListAssignment(const Graph& g, int palette);

  const Graph& graph() const { return *g_; }
  int palette() const { return palette_; }
  int edge_count() const { return static_cast<int>(lists_.size()); }

  const Bitset& list(int e) const { return lists_[static_cast<std::size_t>(e)]; }
  Bitset& list(int e) { return lists_[static_cast<std::size_t>(e)]; }

  void add(int e, Color c) { lists_[static_cast<std::size_t>(e)].set(static_cast<std::size_t>(c)); }
  bool contains(int e, Color c) const {
    return c >= 0 && c < palette_ && lists_[static_cast<std::size_t>(e)].test(static_cast<std::size_t>(c));
  }

 private:
  const Graph* g_;
  int palette_;
  std::vector<Bitset> lists_;
};

// min_e |L(e)|. Throws Errc::empty_graph when the graph has no edges.
int list_size(const ListAssignment& L);

// Union of L(e) over edges incident with v.
Bitset vertex_list(const ListAssignment& L, int v);

// Number of edges at v whose list contains c; 0 when c is foreign.
int color_degree(const ListAssignment& L, int v, Color c);

// Max of color_degree over all (v, c); 0 when every list is empty.
int max_color_degree(const ListAssignment& L);

// A color copied t times. Copies are serialized as single tokens
// base * t + (index - 1), so a copied palette has size palette * t.
struct CopiedColor {
  Color base;
  int index;  // in 1..t
};

inline Color encode_copied(CopiedColor cc, int t) { return cc.base * t + (cc.index - 1); }
inline CopiedColor decode_copied(Color token, int t) { return {token / t, token % t + 1}; }

// L'(e) = L(e) x [t] over copied tokens.
ListAssignment copy_colors(const ListAssignment& L, int t);

// Total or partial edge coloring keyed by edge index.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(int edge_count)
      : colors_(static_cast<std::size_t>(edge_count), kUncolored) {}

  int edge_count() const { return static_cast<int>(colors_.size()); }
  Color at(int e) const { return colors_[static_cast<std::size_t>(e)]; }
  void set(int e, Color c) { colors_[static_cast<std::size_t>(e)] = c; }
  void unset(int e) { colors_[static_cast<std::size_t>(e)] = kUncolored; }
  bool colored(int e) const { return colors_[static_cast<std::size_t>(e)] != kUncolored; }
  bool total() const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  std::vector<Color> colors_;
};

// Strip copy indices from a total coloring over copied tokens.
// Throws Errc::partial_coloring when some edge is uncolored.
EdgeColoring merge_colors(const EdgeColoring& phi, int t);

// List file format: one line per edge, "u v : c1 c2 ... ck" with ascending
// colors. The edge set must match the graph (in any order). Coloring file
// format: one line per edge, "u v c".
ListAssignment read_lists(std::istream& in, const Graph& g);
void write_lists(std::ostream& out, const ListAssignment& L);
EdgeColoring read_coloring(std::istream& in, const Graph& g);
void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& phi);
ListAssignment read_lists_file(const std::string& path, const Graph& g);
void write_lists_file(const std::string& path, const ListAssignment& L);
EdgeColoring read_coloring_file(const std::string& path, const Graph& g);
void write_coloring_file(const std::string& path, const Graph& g, const EdgeColoring& phi);

}  // namespace linforest
