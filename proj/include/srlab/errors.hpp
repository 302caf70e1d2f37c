#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srlab {

enum class ErrorCode {
    // complexes and moves
    NotAFace,
    EmptyFace,
    VertexCollision,
    NotPure,
    InvalidMove,
    NoMoveAvailable,
    // vectors
    LengthMismatch,
    BadIndex,
    LawViolated,
    // linear algebra
    ShapeMismatch,
    // homology
    NotAManifold,
    NotConnected,
    // face ring
    GenericityExhausted,
    NotLsop,
    DegreeOutOfRange,
    // lefschetz
    NotCohenMacaulay,
    NotGorensteinStar,
    SearchExhausted,
    TransferFailed,
    HypothesisViolated,
    NotBuchsbaum,
    SchenzelMismatch,
    NotOrientableManifold,
    FormulaMismatch,
    // toric and io
    InvalidFan,
    ParseError,
    InvalidField,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure carrying the 1-based input line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace srlab
