#ifndef PADIC_ERROR_HPP
#define PADIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace padic
{

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested function
/// (x in the wrong disc, s outside Z_p, mismatched primes, bad prime, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

/// The requested value sits on a pole (s = 1 for zeta, s = 0 for a_0).
class PoleError : public DomainError
{
public:
    using DomainError::DomainError;
};

class DivisionByZero : public DomainError
{
public:
    using DomainError::DomainError;
};

/// All retained digits cancelled, so no further digit can be produced
/// without fabricating it.
class PrecisionExhausted : public Error
{
public:
    using Error::Error;
};

/// A Volkenborn level would need more integrand evaluations than allowed.
class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

} // namespace padic

#endif
