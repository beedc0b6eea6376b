#ifndef SAW_ERRORS_HPP
#define SAW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace saw {

enum class ErrorCode {
    DuplicateEdge,
    SelfLoop,
    ImproperColouring,
    OriginOutOfRange,
    VertexOutOfRange,
    UnsupportedTypeVector,
    PortsNotDistinct,
    Disconnected,
    NTooSmall,
    IdenticalTerminals,
    InvalidGadget,
    NoBracket,
    NonPositiveTarget,
    BoundaryUnsafe,
    NonCubicInterior,
    NonCubicClass,
    NotBipartite,
    EmptyChain,
    NoFixedPointInUnitInterval,
    SeriesTooShort,
    ConventionMismatch,
    SubstitutionMismatch,
    BadInput,
};

const char* error_code_name(ErrorCode c);

// Domain error carrying a machine-readable code. The CLI serializes the
// code verbatim, so tests can match on it.
class SawError : public std::runtime_error {
public:
    SawError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

} // namespace saw

#endif
