#include "wqap/errors.hpp"

namespace wqap {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::PermutationInvalid: return "PermutationInvalid";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotProductMatrix: return "NotProductMatrix";
        case ErrorCode::Not1DDistanceMatrix: return "Not1DDistanceMatrix";
        case ErrorCode::InvalidPartitionInstance: return "InvalidPartitionInstance";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::StateInvalid: return "StateInvalid";
        case ErrorCode::InconsistentTables: return "InconsistentTables";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::InvalidDegreeSequence: return "InvalidDegreeSequence";
        case ErrorCode::NotATreeDegreeSequence: return "NotATreeDegreeSequence";
        case ErrorCode::Empty: return "Empty";
        case ErrorCode::BackboneTooShort: return "BackboneTooShort";
        case ErrorCode::IncompatibleEll: return "IncompatibleEll";
        case ErrorCode::Malformed: return "Malformed";
        case ErrorCode::BadParams: return "BadParams";
    }
    return "UnknownError";
}

}  // namespace wqap
