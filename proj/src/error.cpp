#include "currier/error.hpp"

namespace currier {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DuplicateInstanceId: return "DuplicateInstanceId";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EmptyDatasetId: return "EmptyDatasetId";
    case ErrorCode::MissingInstance: return "MissingInstance";
    case ErrorCode::UnknownInstance: return "UnknownInstance";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DuplicateRecord: return "DuplicateRecord";
    case ErrorCode::TooFewInstances: return "TooFewInstances";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::MetaMismatch: return "MetaMismatch";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::DegenerateScores: return "DegenerateScores";
    case ErrorCode::BadFrac: return "BadFrac";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::OrderCorpusMismatch: return "OrderCorpusMismatch";
    case ErrorCode::BucketMismatch: return "BucketMismatch";
    case ErrorCode::KeyMismatch: return "KeyMismatch";
    case ErrorCode::BadBinWidth: return "BadBinWidth";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace currier
