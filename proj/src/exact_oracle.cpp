#include "linforest/exact_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace linforest {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
  std::uint64_t nodes_left;
  Clock::time_point deadline;
  std::uint64_t nodes_used = 0;

  explicit BudgetState(const SearchBudget& b)
      : nodes_left(b.node_limit),
        deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(b.time_limit_s))) {}

  bool spend() {
    ++nodes_used;
    if (nodes_left == 0) return false;
    --nodes_left;
    if ((nodes_used & 0xfff) == 0 && Clock::now() > deadline) {
      nodes_left = 0;
      return false;
    }
    return true;
  }
};

// Union-find over vertices, one instance per color, with an undo stack so the
// backtracker can roll unions back in reverse order.
class ColorForests {
 public:
  ColorForests(int n, int palette) : n_(n) {
    parent_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(palette));
    size_.assign(parent_.size(), 1);
    for (int c = 0; c < palette; ++c)
      for (int v = 0; v < n; ++v) parent_[idx(c, v)] = v;
  }

  int find(int c, int v) const {
    while (parent_[idx(c, v)] != v) v = parent_[idx(c, v)];
    return v;
  }

  // Returns false (and records nothing) when u and v are already connected.
  bool unite(int c, int u, int v) {
    int ru = find(c, u), rv = find(c, v);
    if (ru == rv) return false;
    if (size_[idx(c, ru)] < size_[idx(c, rv)]) std::swap(ru, rv);
    undo_.push_back({c, rv, size_[idx(c, ru)]});
    parent_[idx(c, rv)] = ru;
    size_[idx(c, ru)] += size_[idx(c, rv)];
    return true;
  }

  std::size_t mark() const { return undo_.size(); }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      auto [c, child, old_root_size] = undo_.back();
      undo_.pop_back();
      int root = find(c, child);
      size_[idx(c, root)] = old_root_size;
      parent_[idx(c, child)] = child;
    }
  }

 private:
  struct Undo {
    int color, child;
    int old_root_size;
  };

  std::size_t idx(int c, int v) const {
    return static_cast<std::size_t>(c) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  int n_;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<Undo> undo_;
};

class Searcher {
 public:
  // degree_limit 2 + acyclic = linear forests; degree_limit t without
  // acyclicity = degree-t coloring.
  Searcher(const Graph& g, const ListAssignment& L, int degree_limit, bool acyclic,
           BudgetState& budget)
      : g_(g),
        palette_(L.palette()),
        degree_limit_(degree_limit),
        acyclic_(acyclic),
        budget_(budget),
        coloring_(g.edge_count()),
        counts_(static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(L.palette()),
                0),
        forests_(acyclic ? std::optional<ColorForests>(std::in_place, g.vertex_count(), L.palette())
                         : std::nullopt) {
    lists_.reserve(static_cast<std::size_t>(L.edge_count()));
    for (int e = 0; e < L.edge_count(); ++e) {
      std::vector<Color> cs;
      L.list(e).for_each([&](std::size_t c) { cs.push_back(static_cast<Color>(c)); });
      lists_.push_back(std::move(cs));
    }

    order_.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      auto ea = g.edge(a), eb = g.edge(b);
      return g.degree(ea.u) + g.degree(ea.v) > g.degree(eb.u) + g.degree(eb.v);
    });

    // Identical lists admit search up to color relabeling: the i-th list
    // position may only be used once all lower positions have appeared.
    symmetric_ = g.edge_count() > 1;
    for (std::size_t e = 1; e < lists_.size() && symmetric_; ++e)
      if (lists_[e] != lists_[0]) symmetric_ = false;
  }

  Feasibility run() {
    Feasibility r = search(0, 0);
    return r;
  }

  const EdgeColoring& witness() const { return coloring_; }

 private:
  std::size_t cidx(int v, Color c) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_) +
           static_cast<std::size_t>(c);
  }

  Feasibility search(std::size_t pos, std::size_t used_positions) {
    if (!budget_.spend()) return Feasibility::budget_exceeded;
    if (pos == order_.size()) return Feasibility::yes;
    int e = order_[pos];
    auto [u, v] = g_.edge(e);
    const auto& list = lists_[static_cast<std::size_t>(e)];
    std::size_t limit = symmetric_ ? std::min(list.size(), used_positions + 1) : list.size();
    bool budget_hit = false;
    for (std::size_t i = 0; i < limit; ++i) {
      Color c = list[i];
      if (counts_[cidx(u, c)] >= degree_limit_ || counts_[cidx(v, c)] >= degree_limit_) continue;
      std::size_t mark = 0;
      if (acyclic_) {
        mark = forests_->mark();
        if (!forests_->unite(c, u, v)) continue;  // would close a monochromatic cycle
      }
      ++counts_[cidx(u, c)];
      ++counts_[cidx(v, c)];
      coloring_.set(e, c);
      Feasibility sub =
          search(pos + 1, symmetric_ ? std::max(used_positions, i + 1) : used_positions);
      if (sub == Feasibility::yes) return sub;
      if (sub == Feasibility::budget_exceeded) budget_hit = true;
      coloring_.unset(e);
      --counts_[cidx(u, c)];
      --counts_[cidx(v, c)];
      if (acyclic_) forests_->rollback(mark);
      if (budget_hit) break;
    }
    return budget_hit ? Feasibility::budget_exceeded : Feasibility::no;
  }

  const Graph& g_;
  int palette_;
  int degree_limit_;
  bool acyclic_;
  bool symmetric_ = false;
  BudgetState& budget_;
  std::vector<std::vector<Color>> lists_;
  std::vector<int> order_;
  EdgeColoring coloring_;
  std::vector<int> counts_;
  std::optional<ColorForests> forests_;
};

DecideResult run_decide(const Graph& g, const ListAssignment& L, int degree_limit, bool acyclic,
                        BudgetState& budget) {
  if (g.edge_count() == 0) return {Feasibility::yes, EdgeColoring(0), budget.nodes_used};
  Searcher s(g, L, degree_limit, acyclic, budget);
  Feasibility verdict = s.run();
  DecideResult out{verdict, std::nullopt, budget.nodes_used};
  if (verdict == Feasibility::yes) out.witness = s.witness();
  return out;
}

ListAssignment identical_lists(const Graph& g, int k) {
  ListAssignment L(g, k);
  for (int e = 0; e < g.edge_count(); ++e)
    for (Color c = 0; c < k; ++c) L.add(e, c);
  return L;
}

// least k in [lo, hi] such that the k identical-list instance is feasible
std::optional<int> threshold_search(const Graph& g, int lo, int hi, bool acyclic, int degree_limit,
                                    const SearchBudget& budget) {
  if (g.edge_count() == 0) return 0;
  BudgetState state(budget);
  for (int k = lo; k <= hi; ++k) {
    DecideResult r = run_decide(g, identical_lists(g, k), degree_limit, acyclic, state);
    if (r.verdict == Feasibility::yes) return k;
    if (r.verdict == Feasibility::budget_exceeded) return std::nullopt;
  }
  return std::nullopt;  // cannot happen for the bounds used below
}

}  // namespace

DecideResult decide_linear_colorable(const Graph& g, const ListAssignment& L,
                                     const SearchBudget& budget) {
  BudgetState state(budget);
  return run_decide(g, L, 2, true, state);
}

DecideResult decide_degree_t_colorable(const Graph& g, const ListAssignment& L, int t,
                                       const SearchBudget& budget) {
  if (t < 1) throw Error(Errc::invalid_params, "degree bound must be >= 1");
  BudgetState state(budget);
  return run_decide(g, L, t, false, state);
}

std::optional<int> linear_arboricity(const Graph& g, const SearchBudget& budget) {
  if (g.edge_count() == 0) return 0;
  int delta = max_degree(g);
  // Any linear forest has at most n-1 edges, and a max-degree vertex needs
  // ceil(delta/2) forests, so both give lower bounds.
  int lb = (delta + 1) / 2;
  if (g.vertex_count() >= 2)
    lb = std::max(lb, (g.edge_count() + g.vertex_count() - 2) / (g.vertex_count() - 1));
  int ub = std::min(delta + 1, g.edge_count());  // la <= chi' <= delta+1
  return threshold_search(g, std::max(lb, 1), ub, true, 2, budget);
}

std::optional<int> chromatic_index_t(const Graph& g, int t, const SearchBudget& budget) {
  if (t < 1) throw Error(Errc::invalid_params, "degree bound must be >= 1");
  if (g.edge_count() == 0) return 0;
  int delta = max_degree(g);
  int lb = (delta + t - 1) / t;
  int ub = std::min(delta + 1, g.edge_count());  // chi'_t <= chi' <= delta+1
  return threshold_search(g, std::max(lb, 1), ub, false, t, budget);
}

namespace {

// Enumerates list assignments edge by edge in a canonical family: an edge's
// list is any k-subset of the colors already in play plus a contiguous block
// of fresh ones. Every assignment of k-subsets is a color relabeling of some
// enumerated one.
class AllListsEnumerator {
 public:
  AllListsEnumerator(const Graph& g, int k, BudgetState& budget)
      : g_(g), k_(k), budget_(budget), palette_(k * std::max(g.edge_count(), 1)) {
    chosen_.assign(static_cast<std::size_t>(g.edge_count()), {});
  }

  Feasibility run() { return recurse(0, 0); }

  const std::vector<std::vector<Color>>& counterexample() const { return chosen_; }
  std::uint64_t assignments() const { return assignments_; }

 private:
  Feasibility recurse(int e, int colors_in_play) {
    if (e == g_.edge_count()) {
      ++assignments_;
      ListAssignment L(g_, palette_);
      for (int f = 0; f < g_.edge_count(); ++f)
        for (Color c : chosen_[static_cast<std::size_t>(f)]) L.add(f, c);
      DecideResult r = run_decide(g_, L, 2, true, budget_);
      if (r.verdict == Feasibility::budget_exceeded) return Feasibility::budget_exceeded;
      // recurse() reports "yes" upward to mean "every assignment so far is
      // colorable", so a non-colorable leaf is the "no" outcome.
      return r.verdict == Feasibility::yes ? Feasibility::yes : Feasibility::no;
    }
    // pick j fresh colors and a (k-j)-subset of the colors in play
    std::vector<Color> subset;
    for (int fresh = 0; fresh <= std::min(k_, palette_ - colors_in_play); ++fresh) {
      int reuse = k_ - fresh;
      if (reuse > colors_in_play) continue;
      subset.clear();
      Feasibility r = choose_reused(e, colors_in_play, fresh, reuse, 0, subset);
      if (r != Feasibility::yes) return r;
    }
    return Feasibility::yes;
  }

  Feasibility choose_reused(int e, int colors_in_play, int fresh, int reuse, Color from,
                            std::vector<Color>& subset) {
    if (static_cast<int>(subset.size()) == reuse) {
      auto& list = chosen_[static_cast<std::size_t>(e)];
      list = subset;
      for (int j = 0; j < fresh; ++j) list.push_back(colors_in_play + j);
      // on a non-yes outcome chosen_ is left intact as the counterexample
      return recurse(e + 1, colors_in_play + fresh);
    }
    for (Color c = from; c < colors_in_play; ++c) {
      subset.push_back(c);
      Feasibility r = choose_reused(e, colors_in_play, fresh, reuse, c + 1, subset);
      subset.pop_back();
      if (r != Feasibility::yes) return r;
    }
    return Feasibility::yes;
  }

  const Graph& g_;
  int k_;
  BudgetState& budget_;
  int palette_;
  std::vector<std::vector<Color>> chosen_;
  std::uint64_t assignments_ = 0;
};

}  // namespace

AllListsResult list_linear_colorable_all_lists(const Graph& g, int k, const SearchBudget& budget) {
  if (k < 0) throw Error(Errc::invalid_params, "list size must be non-negative");
  if (g.edge_count() == 0) return {Feasibility::yes, std::nullopt, 0};
  if (k == 0) {
    // the empty assignment is the only one and admits no coloring
    AllListsResult out{Feasibility::no, ListAssignment(g, 0), 1};
    return out;
  }
  BudgetState state(budget);
  AllListsEnumerator en(g, k, state);
  Feasibility verdict = en.run();
  AllListsResult out{verdict, std::nullopt, en.assignments()};
  if (verdict == Feasibility::no) {
    ListAssignment L(g, k * g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
      for (Color c : en.counterexample()[static_cast<std::size_t>(e)]) L.add(e, c);
    out.counterexample = L;
  }
  return out;
}

}  // namespace linforest
