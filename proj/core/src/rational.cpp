#include "zeff/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace zeff {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer digits_to_integer(std::string_view s) {
    Integer value = 0;
    for (char c : s) {
        value *= 10;
        value += c - '0';
    }
    return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty numeric literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) throw std::invalid_argument("sign without digits");
    }

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
        Integer d = digits_to_integer(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(digits_to_integer(num)) / Rational(d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        Integer scaled = whole.empty() ? Integer(0) : digits_to_integer(whole);
        Integer pow10 = 1;
        for (char c : frac) {
            scaled *= 10;
            scaled += c - '0';
            pow10 *= 10;
        }
        value = Rational(scaled) / Rational(pow10);
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        value = Rational(digits_to_integer(s));
    }

    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

} // namespace zeff
