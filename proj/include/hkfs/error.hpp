#pragma once

#include <stdexcept>
#include <string>

namespace hkfs {

enum class ErrorCode {
    OddCount,
    NonPositiveExponent,
    DegenerateCone,
    EmptyClause,
    UnboundedCell,
    UnboundedRegion,
    DimensionMismatch,
    NameOverflow,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// Input errors are the user's fault; everything else is internal.
    bool is_usage_error() const noexcept {
        return code_ == ErrorCode::OddCount || code_ == ErrorCode::NonPositiveExponent ||
               code_ == ErrorCode::NameOverflow || code_ == ErrorCode::ParseError;
    }

private:
    ErrorCode code_;
};

}  // namespace hkfs
