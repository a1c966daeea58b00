#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hankelwalk {

enum class ErrorKind {
    InsufficientTerms,
    EmptyPrefix,
    CapExceeded,
    InsufficientWeights,
    ZeroLeadingTerm,
    InconsistentMoments,
    MalformedPadding,
    InvalidTuple,
    InvalidVertex,
    NotAdjacent,
    InvalidWalk,
    NotBipartite,
    InvalidArgument,
    ParseError,
    MismatchBug,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure is reported through this one exception type; `kind()`
/// lets front ends map failures without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hankelwalk
