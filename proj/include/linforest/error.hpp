#pragma once

#include <stdexcept>
#include <string>

namespace linforest {

enum class Errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  degree_exceeds_two,
  empty_graph,
  partial_coloring,
  not_degree_two,
  weight_out_of_range,
  domain_error,
  round_budget_exhausted,
  infeasible,
  verification_failed,
  invalid_params,
  generation_failed,
  format_error,
  io_error,
};

const char* to_string(Errc kind);

class Error : public std::runtime_error {
 public:
  Error(Errc kind, std::string message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  Errc kind() const { return kind_; }

 private:
  Errc kind_;
};

}  // namespace linforest
