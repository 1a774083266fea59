#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    ImproperColoring,
    UnknownVertex,
    UnknownColor,
    UnknownEdge,
    EmptyGraph,
    TargetExceedsMinDegree,
    ExtensionFailed,
    ZeroDelta,
    CapExceeded,
    ZeroOrder,
    InfeasibleDegree,
    InvalidLatin,
    Parse,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rainbow
