#include "ncode/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ncode {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num) || (slash != std::string_view::npos && (!is_integer_literal(den) ||
                                                                         den.front() == '-' || den.front() == '+'))) {
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Rational value;
    if (slash == std::string_view::npos) {
        value = Rational(mpz_class(n));
    } else {
        mpz_class d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(mpz_class(n), d);
        value.canonicalize();
    }
    return value;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace ncode
