#ifndef FREEPROB_RATIONAL_HPP
#define FREEPROB_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace freeprob
{

// Exact coefficient ring. Every module refers to coefficients through this
// alias only; expression templates are disabled so the type composes with
// Eigen and with generic code.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Parses "p", "p/q" or "-p/q" and returns the reduced value.
// Throws ValidationError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value)
{
    return value.is_zero();
}

} // namespace freeprob

#endif
