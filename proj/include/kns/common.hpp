#pragma once

#include <stdexcept>
#include <string_view>

namespace kns {

inline constexpr std::string_view version = "0.1.0";

/// Invalid argument or unmet operation precondition.
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file or serialized payload.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Refusal because a configured resource cap would be exceeded.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result of a bound or hypothesis check.  `skipped` means the check's
/// hypothesis does not apply to the input; only `violated` is a failure.
enum class CheckOutcome { holds, violated, skipped };

constexpr std::string_view to_string(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::holds: return "holds";
        case CheckOutcome::violated: return "violated";
        default: return "skipped";
    }
}

} // namespace kns
