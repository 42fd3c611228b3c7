#pragma once

#include <stdexcept>
#include <string>

namespace cidual {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An input violated an operation's documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

/// Malformed text input; `locus` names the offending line or field.
struct ParseError : Error {
    explicit ParseError(const std::string& what, std::string where = {})
        : Error(where.empty() ? what : where + ": " + what), locus(std::move(where)) {}
    std::string locus;
};

/// A computation hit its configured dimension cap.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// A finite window could not pin down an asymptotic growth rate.
struct UnstableFit : Error {
    using Error::Error;
};

}  // namespace cidual
