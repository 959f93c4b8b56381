#include "fatchroma/rational.hpp"

#include <charconv>

namespace fatchroma {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

long long parse_int(std::string_view s) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("rational: malformed integer '" + std::string(s) + "'");
    return value;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty())
        throw std::invalid_argument("rational: empty string");
    const auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(s), 1);
    return Rational(parse_int(trim(s.substr(0, slash))), parse_int(trim(s.substr(slash + 1))));
}

} // namespace fatchroma
