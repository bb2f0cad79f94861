#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace respref {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value outside the carrier, a bad arity, an unknown variable, and the like.
struct DomainError : Error {
    using Error::Error;
};

/// The instance cannot perform the requested operation (non-residuated
/// carrier, non-enumerable carrier, unrepresentable tail, infeasible z).
struct UnsupportedError : Error {
    using Error::Error;
};

/// A tuple that is not a member of Lex_k; carries the offending position.
struct InvalidLexTupleError : DomainError {
    InvalidLexTupleError(const std::string& what, std::size_t index)
        : DomainError(what), index(index) {}
    std::size_t index;
};

/// Work exceeded a configured cap (e.g. brute-force assignment budget).
struct ResourceError : Error {
    using Error::Error;
};

/// A malformed or inconsistent input document.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace respref
