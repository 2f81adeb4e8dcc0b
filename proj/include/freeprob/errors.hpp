#ifndef FREEPROB_ERRORS_HPP
#define FREEPROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace freeprob
{

// Base for every error raised on bad user input. The CLI maps these to
// exit status 3.
class Error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class ValidationError : public Error
{
public:
    using Error::Error;
};

// Requested size outside the supported range (e.g. NC(n) above the cap).
class SizeError : public Error
{
public:
    using Error::Error;
};

class AlphabetMismatch : public Error
{
public:
    using Error::Error;
};

// A first-order coefficient is zero where a unit is required.
class NotInvertible : public Error
{
public:
    using Error::Error;
};

// Input lies outside the domain of a transform (e.g. first coefficient != 1).
class DomainError : public Error
{
public:
    using Error::Error;
};

} // namespace freeprob

#endif
