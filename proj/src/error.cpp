#include "qlan/error.hpp"

namespace qlan {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownVertex: return "unknown-vertex";
        case ErrorKind::InvalidGraph: return "invalid-graph";
        case ErrorKind::NotANeighbor: return "not-a-neighbor";
        case ErrorKind::NonEmptyNeighborhood: return "nonempty-neighborhood";
        case ErrorKind::PlanValidation: return "plan-validation";
        case ErrorKind::Parameter: return "parameter";
        case ErrorKind::Ordering: return "ordering";
        case ErrorKind::Role: return "role";
        case ErrorKind::Disconnected: return "disconnected";
        case ErrorKind::NotAChainState: return "not-a-chain-state";
        case ErrorKind::NotATreeLikeState: return "not-a-tree-like-state";
        case ErrorKind::OverlappingPairs: return "overlapping-pairs";
        case ErrorKind::BoundsMismatch: return "bounds-mismatch";
        case ErrorKind::Resource: return "resource";
        case ErrorKind::InconsistentOutcome: return "inconsistent-outcome";
        case ErrorKind::Rank: return "rank";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, std::size_t step_index)
    : std::runtime_error("step " + std::to_string(step_index) + ": " + std::string(to_string(kind)) + ": " +
                         message),
      kind_(kind),
      step_index_(step_index) {}

}  // namespace qlan
