#include "zplusi/rational.hpp"

#include <cctype>

#include "zplusi/errors.hpp"

namespace zplusi {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Validates an optionally-signed decimal integer.
bool valid_int(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return all_digits(s);
}

}  // namespace

Rational rat_from_string(std::string_view text) {
    // trim surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational literal");

    std::string_view num_part = text, den_part;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
        if (den_part.find('/') != std::string_view::npos)
            throw ParseError("rational literal with multiple '/': " + std::string(text));
    }
    if (!valid_int(num_part)) throw ParseError("bad rational numerator: " + std::string(text));
    Integer num(std::string(num_part), 10);
    Integer den(1);
    if (!den_part.empty() || text.find('/') != std::string_view::npos) {
        if (!valid_int(den_part)) throw ParseError("bad rational denominator: " + std::string(text));
        den = Integer(std::string(den_part), 10);
        if (den == 0) throw ZeroDenominator("rational denominator is zero: " + std::string(text));
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rational& r) {
    return r.get_str();
}

bool rat_is_integer(const Rational& r) {
    return r.get_den() == 1;
}

long rat_to_long(const Rational& r) {
    if (!rat_is_integer(r)) throw std::invalid_argument("rational is not an integer: " + rat_to_string(r));
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large for long: " + rat_to_string(r));
    return r.get_num().get_si();
}

}  // namespace zplusi
