#include "tamecft/error.hpp"

namespace tamecft {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::UnsupportedPoint: return "UnsupportedPoint";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotPIntegral: return "NotPIntegral";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::NonCommutingSquare: return "NonCommutingSquare";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

}  // namespace tamecft
