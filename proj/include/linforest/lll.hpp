#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "linforest/error.hpp"

namespace linforest::lll {

// One independent random trial. Bernoulli trials (domain 2) carry their own
// retention probability; uniform trials draw an integer from [0, domain) and
// house choices like "pick one edge of this window".
struct Trial {
  std::uint32_t domain = 2;
  double p = 0.5;  // P(value == 1), Bernoulli trials only
};

class VariableSpace {
 public:
  int add_bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0))
      throw Error(Errc::invalid_params, "retention probability must be in [0,1]");
    trials_.push_back({2, p});
    return static_cast<int>(trials_.size()) - 1;
  }

  int add_uniform(std::uint32_t domain) {
    if (domain == 0) throw Error(Errc::invalid_params, "uniform trial needs a non-empty domain");
    trials_.push_back({domain, 0.0});
    return static_cast<int>(trials_.size()) - 1;
  }

  int size() const { return static_cast<int>(trials_.size()); }
  const Trial& trial(int i) const { return trials_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Trial> trials_;
};

using Assignment = std::vector<std::uint32_t>;

// Independent draw of every trial; deterministic in the seed.
Assignment sample(const VariableSpace& space, std::uint64_t seed);

// A bad event: predicate over the current assignment that must end up false.
// The predicate may only read variables in scope; resampling rewrites exactly
// the scope.
struct BadEvent {
  std::string label;
  std::vector<int> scope;
  std::function<bool(const Assignment&)> holds;
  double weight = -1.0;  // optional local-lemma weight x in [0,1); < 0 = unset
};

enum class SelectionRule { lowest_index, uniform_random };

struct ResampleOutcome {
  bool success = false;
  Assignment assignment;
  std::uint64_t resamples = 0;
  std::vector<std::uint64_t> violation_counts;  // indexed like the event vector
  int last_violated = -1;                       // event index, set on failure
};

// Moser-Tardos loop: while some event holds, resample the violated event's
// scope. Event selection defaults to lowest index, which keeps runs
// reproducible; a success outcome is re-verified against every predicate
// before it is returned.
ResampleOutcome resample_until_clear(const VariableSpace& space,
                                     const std::vector<BadEvent>& events,
                                     std::uint64_t max_rounds, std::uint64_t seed,
                                     SelectionRule rule = SelectionRule::lowest_index);

// Symmetric local lemma condition 4pd <= 1.
bool check_symmetric_lll(double p, double d);

struct WeightedEvent {
  double probability;          // upper bound on P(A)
  double weight;               // x_A in [0,1)
  std::vector<int> dependencies;  // indices of the events in D_A
};

// For each event, whether P(A) <= x_A * prod_{B in D_A} (1 - x_B).
// Throws Errc::weight_out_of_range when some weight is outside [0,1).
std::vector<bool> check_general_lll(const std::vector<WeightedEvent>& events);

}  // namespace linforest::lll
