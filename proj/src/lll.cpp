#include "linforest/lll.hpp"

#include <cmath>
#include <set>

#include "linforest/rng.hpp"

namespace linforest::lll {

namespace {

std::uint32_t draw(Rng& rng, const Trial& t) {
  if (t.domain == 2) return rng.bernoulli(t.p) ? 1u : 0u;
  return static_cast<std::uint32_t>(rng.bounded(t.domain));
}

}  // namespace

Assignment sample(const VariableSpace& space, std::uint64_t seed) {
  Rng rng(seed);
  Assignment a(static_cast<std::size_t>(space.size()));
  for (int i = 0; i < space.size(); ++i) a[static_cast<std::size_t>(i)] = draw(rng, space.trial(i));
  return a;
}

ResampleOutcome resample_until_clear(const VariableSpace& space,
                                     const std::vector<BadEvent>& events,
                                     std::uint64_t max_rounds, std::uint64_t seed,
                                     SelectionRule rule) {
  if (max_rounds < 1) throw Error(Errc::invalid_params, "max_rounds must be >= 1");
  Rng rng(seed);
  ResampleOutcome out;
  out.violation_counts.assign(events.size(), 0);
  out.assignment.resize(static_cast<std::size_t>(space.size()));
  for (int i = 0; i < space.size(); ++i)
    out.assignment[static_cast<std::size_t>(i)] = draw(rng, space.trial(i));

  // var -> events whose scope contains it, for incremental re-evaluation
  std::vector<std::vector<int>> watchers(static_cast<std::size_t>(space.size()));
  for (std::size_t i = 0; i < events.size(); ++i)
    for (int v : events[i].scope) watchers[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));

  std::set<int> violated;
  for (std::size_t i = 0; i < events.size(); ++i)
    if (events[i].holds(out.assignment)) violated.insert(static_cast<int>(i));

  std::vector<int> touched;
  while (true) {
    if (violated.empty()) {
      // full re-verification; catches any predicate that read outside its scope
      bool clean = true;
      for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i].holds(out.assignment)) {
          violated.insert(static_cast<int>(i));
          clean = false;
        }
      if (clean) {
        out.success = true;
        return out;
      }
    }
    if (out.resamples >= max_rounds) {
      out.success = false;
      out.last_violated = *violated.begin();
      return out;
    }

    int ev;
    if (rule == SelectionRule::lowest_index) {
      ev = *violated.begin();
    } else {
      auto it = violated.begin();
      std::advance(it, static_cast<long>(rng.bounded(violated.size())));
      ev = *it;
    }
    ++out.resamples;
    ++out.violation_counts[static_cast<std::size_t>(ev)];

    touched.clear();
    for (int v : events[static_cast<std::size_t>(ev)].scope) {
      out.assignment[static_cast<std::size_t>(v)] = draw(rng, space.trial(v));
      touched.push_back(v);
    }
    for (int v : touched)
      for (int w : watchers[static_cast<std::size_t>(v)]) {
        if (events[static_cast<std::size_t>(w)].holds(out.assignment))
          violated.insert(w);
        else
          violated.erase(w);
      }
  }
}

bool check_symmetric_lll(double p, double d) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::invalid_params, "p must be in [0,1]");
  if (d < 0.0) throw Error(Errc::invalid_params, "d must be non-negative");
  // boundary slack so decimal inputs like p=0.01, d=25 land on 4pd == 1
  return 4.0 * p * d <= 1.0 + 1e-12;
}

std::vector<bool> check_general_lll(const std::vector<WeightedEvent>& events) {
  for (const auto& ev : events)
    if (!(ev.weight >= 0.0 && ev.weight < 1.0))
      throw Error(Errc::weight_out_of_range, "weight " + std::to_string(ev.weight));
  std::vector<bool> ok;
  ok.reserve(events.size());
  for (const auto& ev : events) {
    // log-space product of (1 - x_B) to survive very long dependency lists
    double log_bound = std::log(ev.weight);
    for (int b : ev.dependencies)
      log_bound += std::log1p(-events[static_cast<std::size_t>(b)].weight);
    ok.push_back(ev.probability <= 0.0 ||
                 std::log(ev.probability) <= log_bound);
  }
  return ok;
}

}  // namespace linforest::lll
