#include "invjac/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace invjac {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("malformed rational literal: " + text);
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size()) {
        if (text[i] != '/')
            throw std::invalid_argument("malformed rational literal: " + text);
        ++i;
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed rational literal: " + text);
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i != text.size())
            throw std::invalid_argument("malformed rational literal: " + text);
    }
    Rational value(text, 10);
    if (value.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + text);
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

} // namespace invjac
