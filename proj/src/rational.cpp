#include "grasstensor/rational.hpp"

#include <cctype>

#include "grasstensor/errors.hpp"

namespace grasstensor {

namespace {

bool is_integer_literal(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    for (std::size_t i = begin; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin == end) throw ParseError("empty rational literal");

    bool negative = false;
    if (text[begin] == '+' || text[begin] == '-') {
        negative = text[begin] == '-';
        ++begin;
    }

    const std::string body = text.substr(begin, end - begin);
    const auto slash = body.find('/');
    const auto dot = body.find('.');

    Rational value;
    if (slash != std::string::npos) {
        if (dot != std::string::npos) throw ParseError("rational literal mixes '/' and '.': " + text);
        if (!is_integer_literal(body, 0, slash) || !is_integer_literal(body, slash + 1, body.size()))
            throw ParseError("bad rational literal: " + text);
        Integer num(body.substr(0, slash));
        Integer den(body.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: " + text);
        value = Rational(num, den);
    } else if (dot != std::string::npos) {
        const std::string int_part = body.substr(0, dot);
        const std::string frac_part = body.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) throw ParseError("bad rational literal: " + text);
        if (!int_part.empty() && !is_integer_literal(body, 0, dot)) throw ParseError("bad rational literal: " + text);
        if (!frac_part.empty() && !is_integer_literal(body, dot + 1, body.size()))
            throw ParseError("bad rational literal: " + text);
        Integer num = int_part.empty() ? Integer(0) : Integer(int_part);
        Integer den = 1;
        for (char c : frac_part) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        value = Rational(num, den);
    } else {
        if (!is_integer_literal(body, 0, body.size())) throw ParseError("bad rational literal: " + text);
        value = Rational(Integer(body));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace grasstensor
