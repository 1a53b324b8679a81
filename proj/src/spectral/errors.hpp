#pragma once
#include <stdexcept>
#include <string>

namespace pdir {

// Every failure raised by the library derives from Error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (wrong side, bad sizes, bad flags).
class UsageError : public Error {
public:
    using Error::Error;
};

// Input is outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// A per-frequency matrix problem is too ill-conditioned to trust.
class ConditioningError : public Error {
public:
    using Error::Error;
};

// Iterative solve ran out of budget.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double residual) : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// An assembled operator has spectrum in the open left half-plane.
class AccretivityError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace pdir
