#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "linforest/generators.hpp"
#include "linforest/pipeline.hpp"

namespace linforest {

// CSV schema version stamped into every row.
inline constexpr int kCsvSchemaVersion = 1;

struct ConcentrationParams {
  int ell = 100;                    // list size of the probe edge
  std::vector<double> ps{0.1, 0.3};  // sampling probabilities to sweep
  int trials = 10000;
  std::uint64_t seed = 0;
};

// Pushes the three per-edge statistics through the real reserve/sparsify
// samplers with resampling disabled and reports empirical moments and
// 3-sigma tail frequencies against the exact binomial forms:
// reserve size ~ B(ell, p^2), residual size ~ B(ell, (1-p)^2),
// sparsified size ~ B(ell, p).
void run_concentration(const ConcentrationParams& params, std::ostream& csv);

struct SuccessRateParams {
  GraphFamily family = GraphFamily::cycle;
  FamilyParams graph;
  ListMode mode = ListMode::identical;
  int k = 3;
  int palette = 3;
  PipelineConfig cfg;
  int trials = 100;
  std::uint64_t seed = 0;
};

// Runs solve over `trials` seeded instances; reports the success fraction,
// mean stage resample counts, and failure causes. Every successful coloring
// passes through check_linear before it is counted (an uncertified coloring
// aborts the experiment). CSV rows carry no wall-clock fields, so a row is
// exactly regenerable from (experiment, params, seed); runtime goes to
// stderr.
void run_success_rate(const SuccessRateParams& params, std::ostream& csv);

}  // namespace linforest
