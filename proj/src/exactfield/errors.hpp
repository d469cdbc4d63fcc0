#ifndef WINGER_EXACTFIELD_ERRORS_HPP
#define WINGER_EXACTFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace winger {

// Every error raised by the toolkit derives from Error. A claim that throws
// an Error is recorded as failed; anything else is an internal fault.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error
{
public:
  DivisionByZero() : Error("division by zero") {}
};

// Operands that must agree (conductor, degree, shape, group tag) do not.
class MismatchError : public Error
{
public:
  using Error::Error;
};

// Input outside the documented domain of an operation.
class DomainError : public Error
{
public:
  using Error::Error;
};

// A structural check on computed data failed (orbit size, survivor count,
// non-closed group, ...).
class CheckError : public Error
{
public:
  using Error::Error;
};

// Violated invariant that no input can trigger; indicates a bug.
class InternalError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace winger

#endif // WINGER_EXACTFIELD_ERRORS_HPP
