#include "linforest/error.hpp"

namespace linforest {

const char* to_string(Errc kind) {
  switch (kind) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::degree_exceeds_two: return "DegreeExceedsTwo";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::partial_coloring: return "PartialColoring";
    case Errc::not_degree_two: return "NotDegreeTwo";
    case Errc::weight_out_of_range: return "WeightOutOfRange";
    case Errc::domain_error: return "DomainError";
    case Errc::round_budget_exhausted: return "RoundBudgetExhausted";
    case Errc::infeasible: return "Infeasible";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::generation_failed: return "GenerationFailed";
    case Errc::format_error: return "FormatError";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace linforest
