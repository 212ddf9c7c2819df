#include "eos/error.hpp"

namespace eos {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::MassNotOne: return "MassNotOne";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::TooFewMoments: return "TooFewMoments";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::RankDetectionAmbiguous: return "RankDetectionAmbiguous";
    case ErrorCode::RecoveryFailed: return "RecoveryFailed";
    case ErrorCode::IntegrationFailure: return "IntegrationFailure";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

}  // namespace eos
