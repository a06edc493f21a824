#include "wham/rational.hpp"

#include "wham/error.hpp"

#include <cctype>

namespace wham {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole)
{
    if (digits.empty())
        throw InvalidArgument("malformed rational \"" + std::string(whole) + "\"");
    BigInt value = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InvalidArgument("malformed rational \"" + std::string(whole) + "\"");
        value = value * 10 + (c - '0');
    }
    return value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    BigInt num = parse_integer(body.substr(0, slash), text);
    BigInt den = 1;
    if (slash != std::string_view::npos)
        den = parse_integer(body.substr(slash + 1), text);
    if (den == 0)
        throw InvalidArgument("zero denominator in rational \"" + std::string(text) + "\"");
    Rational value(num, den);
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value)
{
    const BigInt den = boost::multiprecision::denominator(value);
    std::string out = boost::multiprecision::numerator(value).str();
    if (den != 1)
        out += "/" + den.str();
    return out;
}

} // namespace wham
