#include <freeprob/rational.hpp>

#include <cctype>

#include <freeprob/errors.hpp>

namespace freeprob
{

namespace
{

bool valid_integer(std::string_view s, bool allow_sign)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw ValidationError("malformed rational: '" + std::string(text) + "'");
    }
    std::string num_str(num);
    if (num_str[0] == '+') {
        num_str.erase(0, 1);
    }
    boost::multiprecision::mpz_int p(num_str);
    boost::multiprecision::mpz_int q{std::string(den)};
    if (q == 0) {
        throw ValidationError("zero denominator in '" + std::string(text) + "'");
    }
    // The two-argument constructor canonicalizes.
    return Rational(p, q);
}

std::string to_string(const Rational& value)
{
    return value.str();
}

} // namespace freeprob
