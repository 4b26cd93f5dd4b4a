#ifndef SUBORD_ERRORS_HPP
#define SUBORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subord {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input (maps to CLI exit code 2).
struct DomainError : Error {
    using Error::Error;
};

/// A Moebius factor was evaluated at its pole.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

/// An operation's precondition does not hold for otherwise valid input (exit code 3).
struct PreconditionError : Error {
    using Error::Error;
};

/// Internal numerical defect: a guard that must hold on valid input failed (exit code 4).
struct NumericalDefect : Error {
    using Error::Error;
};

/// Phase continuation could not keep steps below a quarter turn within its budget.
struct BranchError : NumericalDefect {
    using NumericalDefect::NumericalDefect;
};

} // namespace subord

#endif // SUBORD_ERRORS_HPP
