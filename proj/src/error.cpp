#include "g2theta/error.hpp"

namespace g2theta {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotConvergent: return "NotConvergent";
        case ErrorCode::NegativeTau12Im: return "NegativeTau12Im";
        case ErrorCode::TolTooSmall: return "TolTooSmall";
        case ErrorCode::UnknownIdentity: return "UnknownIdentity";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::DenominatorNearZero: return "DenominatorNearZero";
        case ErrorCode::PoleEncountered: return "PoleEncountered";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace g2theta
