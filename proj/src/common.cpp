#include "fracol/common.hpp"

#include <cctype>

namespace fracol {

std::string to_string(const Rational& r) { return r.str(); }

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
        throw Error(ErrorKind::invalid_input, "malformed rational '" + std::string(text) + "'");
    }
    Integer d{std::string(den)};
    if (d == 0) {
        throw Error(ErrorKind::invalid_input, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(Integer{std::string(num)}, d);
}

}  // namespace fracol
