#include "stratal/rational.hpp"

#include "stratal/errors.hpp"

#include <cctype>

namespace stratal {

namespace {

bool valid_integer_text(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    if (text.empty()) return false;
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw ConfigError("malformed rational '" + std::string(text) + "' (expected p/q)");
    Integer d = parse_integer(den);
    if (d == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_str(10);
}

long floor_to_long(const Rational& value) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    if (!f.fits_slong_p()) throw DomainError("integer part of " + to_string(value) + " out of range");
    return f.get_si();
}

}  // namespace stratal
