#include "oie/rational.hpp"

#include <cctype>
#include <ostream>

namespace oie {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw ParseError("not a rational literal: \"" + std::string(text) + "\"");
}

} // namespace

Rational::Rational(long num, long den) : v_(0) {
    if (den == 0) throw InvalidInputError("rational denominator must not be zero");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    mpq_class value;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const std::string_view num = body.substr(0, slash);
        const std::string_view den = body.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den)) bad_literal(text);
        const mpz_class d(std::string(den), 10);
        if (d == 0) bad_literal(text);
        value = mpq_class(mpz_class(std::string(num), 10), d);
        value.canonicalize();
    } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = body.substr(0, dot);
        const std::string_view frac = body.substr(dot + 1);
        if (!is_digits(whole) || !is_digits(frac)) bad_literal(text);
        mpz_class scale(1);
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const mpz_class scaled =
            mpz_class(std::string(whole), 10) * scale + mpz_class(std::string(frac), 10);
        value = mpq_class(scaled, scale);
        value.canonicalize();
    } else {
        if (!is_digits(body)) bad_literal(text);
        value = mpq_class(mpz_class(std::string(body), 10));
    }

    if (negative) value = -value;
    return Rational(value);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw InvalidInputError("division of rationals by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace oie
