#include "srlab/errors.hpp"

namespace srlab {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotAFace: return "NotAFace";
        case ErrorCode::EmptyFace: return "EmptyFace";
        case ErrorCode::VertexCollision: return "VertexCollision";
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::InvalidMove: return "InvalidMove";
        case ErrorCode::NoMoveAvailable: return "NoMoveAvailable";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::LawViolated: return "LawViolated";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotAManifold: return "NotAManifold";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::GenericityExhausted: return "GenericityExhausted";
        case ErrorCode::NotLsop: return "NotLsop";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::NotCohenMacaulay: return "NotCohenMacaulay";
        case ErrorCode::NotGorensteinStar: return "NotGorensteinStar";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::TransferFailed: return "TransferFailed";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::NotBuchsbaum: return "NotBuchsbaum";
        case ErrorCode::SchenzelMismatch: return "SchenzelMismatch";
        case ErrorCode::NotOrientableManifold: return "NotOrientableManifold";
        case ErrorCode::FormulaMismatch: return "FormulaMismatch";
        case ErrorCode::InvalidFan: return "InvalidFan";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidField: return "InvalidField";
    }
    return "Unknown";
}

}  // namespace srlab
