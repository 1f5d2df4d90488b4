#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamecft {

enum class ErrorKind {
    ZeroInput,
    NotPrime,
    NotAUnit,
    PreconditionViolated,
    ZeroElement,
    UnsupportedPoint,
    NotMonic,
    NotPIntegral,
    BadModulus,
    InternalInconsistency,
    InvalidInstance,
    NonCommutingSquare,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tamecft
