// Exact rational numbers backed by GMP. Every value is kept in canonical
// form (lowest terms, positive denominator), so equality is plain value
// equality and comparisons never involve rounding.

#ifndef OIE_RATIONAL_HPP
#define OIE_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "oie/error.hpp"

namespace oie {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_(mpz_class(std::to_string(n))) {}

    // Throws InvalidInputError on a zero denominator.
    Rational(long num, long den);

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p/q", decimal literals ("9.4" becomes 47/5), and plain
    // integers, each with an optional leading sign.
    static Rational parse(std::string_view text);

    // "p/q" with q > 1, otherwise just the integer.
    std::string str() const;

    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace oie

#endif
