#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2theta {

enum class ErrorCode {
    NotConvergent,
    NegativeTau12Im,
    TolTooSmall,
    UnknownIdentity,
    PreconditionViolated,
    DenominatorNearZero,
    PoleEncountered,
    InvalidConfig,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the C
// layer can map it onto a status value without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace g2theta
