#ifndef WQAP_ERRORS_HPP
#define WQAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wqap {

enum class ErrorCode {
    PermutationInvalid,
    DimensionMismatch,
    NotSquare,
    NotProductMatrix,
    Not1DDistanceMatrix,
    InvalidPartitionInstance,
    IndexOutOfRange,
    Overflow,
    StateInvalid,
    InconsistentTables,
    InstanceTooLarge,
    InvalidDegreeSequence,
    NotATreeDegreeSequence,
    Empty,
    BackboneTooShort,
    IncompatibleEll,
    Malformed,
    BadParams,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace wqap

#endif
