#pragma once

#include <stdexcept>
#include <string>

namespace rpt {

/// Base of every error thrown by the library.
struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct ParseError : Error
{
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error
{
    using Error::Error;
};

struct RangeError : Error
{
    using Error::Error;
};

/// An exact enumeration would exceed its configured budget.
struct BudgetExceeded : Error
{
    using Error::Error;
};

/// A postcondition or certificate that must hold by construction failed to
/// re-verify. Always indicates a bug or a misuse of parameters.
struct VerificationFailure : Error
{
    using Error::Error;
};

/// A search that the theory says must succeed came back empty.
struct SearchFailure : Error
{
    using Error::Error;
};

} // namespace rpt
