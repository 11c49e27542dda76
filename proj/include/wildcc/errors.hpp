#pragma once

#include <stdexcept>
#include <string>

namespace wildcc {

// Input errors map to exit code 1, invariant violations to exit code 2.
enum class ErrorKind {
    Syntax,
    UnknownVariable,
    InvalidInput,
    PolarLocusOutsideBoundary,
    NegativeValuation,
    DivisionByZero,
    NotASquareInRadicial,
    UnsupportedAmbient,
    CenterNotRational,
    NotClean,
    ReductionFailed,
    InternalPole,
    DepthExceeded,
    InvariantViolation,
};

const char* error_kind_name(ErrorKind k);
bool is_input_error(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void check(bool cond, const std::string& msg) {
    if (!cond) fail(ErrorKind::InvariantViolation, msg);
}

}  // namespace wildcc
