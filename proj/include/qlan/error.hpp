#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qlan {

enum class ErrorKind {
    UnknownVertex,
    InvalidGraph,
    NotANeighbor,
    NonEmptyNeighborhood,
    PlanValidation,
    Parameter,
    Ordering,
    Role,
    Disconnected,
    NotAChainState,
    NotATreeLikeState,
    OverlappingPairs,
    BoundsMismatch,
    Resource,
    InconsistentOutcome,
    Rank,
    Parse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for every domain failure. The kind is what callers
// branch on; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    Error(ErrorKind kind, const std::string& message, std::size_t step_index);

    ErrorKind kind() const noexcept { return kind_; }
    // Set when the failure happened while applying a measurement plan.
    std::optional<std::size_t> step_index() const noexcept { return step_index_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> step_index_;
};

}  // namespace qlan
