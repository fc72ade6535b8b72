#include "nesto/rational.hpp"

#include <cctype>

namespace nesto {

namespace {

Integer parse_integer(const std::string& text, const std::string& whole) {
    size_t k = 0;
    bool negative = false;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        negative = text[k] == '-';
        ++k;
    }
    if (k == text.size()) throw input_error("cannot parse rational '" + whole + "'");
    for (size_t i = k; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw input_error("cannot parse rational '" + whole + "'");
    Integer value(text.substr(k));
    return negative ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    Integer num = parse_integer(slash == std::string::npos ? text : text.substr(0, slash), text);
    Integer den(1);
    if (slash != std::string::npos) den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw input_error("zero denominator in '" + text + "'");
    return Rational(num) / Rational(den);
}

std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace nesto
