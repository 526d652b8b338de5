#include "fracsplit/rational.hpp"

#include <algorithm>
#include <cctype>

#include "fracsplit/errors.hpp"

namespace fracsplit {

double to_double(const Rational& q) { return q.convert_to<double>(); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

namespace {

Integer floor_int(const Rational& q) {
    // cpp_rational keeps the denominator positive.
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer quot = n / d;
    if (n % d != 0 && n < 0) --quot;
    return quot;
}

long long to_ll(const Integer& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw DomainError("rational out of integer range");
    return v.convert_to<long long>();
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// cpp_int's string constructor reads a leading 0 as an octal prefix.
Integer parse_digits(std::string_view s) {
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    return Integer{std::string(s)};
}

}  // namespace

long long floor_ll(const Rational& q) { return to_ll(floor_int(q)); }

long long ceil_ll(const Rational& q) {
    Integer f = floor_int(q);
    if (Rational(f) != q) ++f;
    return to_ll(f);
}

std::string to_pq_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw DomainError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw DomainError("bad rational literal: '" + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw DomainError("bad rational literal: '" + std::string(text) + "'");
        Integer d = parse_digits(den);
        if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
        value = Rational(parse_digits(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ipart = s.substr(0, dot);
        std::string_view fpart = s.substr(dot + 1);
        if (ipart.empty() && fpart.empty())
            throw DomainError("bad rational literal: '" + std::string(text) + "'");
        if ((!ipart.empty() && !all_digits(ipart)) || (!fpart.empty() && !all_digits(fpart)))
            throw DomainError("bad rational literal: '" + std::string(text) + "'");
        Integer scale = 1;
        for (size_t i = 0; i < fpart.size(); ++i) scale *= 10;
        Integer digits = parse_digits(std::string(ipart) + std::string(fpart));
        value = Rational(digits, scale);
    } else {
        if (!all_digits(s)) throw DomainError("bad rational literal: '" + std::string(text) + "'");
        value = Rational(parse_digits(s));
    }
    return negative ? -value : value;
}

}  // namespace fracsplit
