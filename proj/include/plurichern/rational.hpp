#pragma once

/**
 * Exact rational numbers over arbitrary-precision integers.
 *
 * Values are always canonical: the denominator is positive and coprime to
 * the numerator, and zero is 0/1. Division by zero throws
 * plurichern::Error(InvalidArgument).
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace plurichern {

using Integer = mpz_class;

inline Integer make_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(static_cast<long>(v)) {}
    Rational(const Integer& v) : value_(v) {}
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Throws InvalidArgument unless is_integer().
    Integer to_integer() const;
    Integer floor() const;
    Integer ceil() const;
    double to_double() const { return value_.get_d(); }

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;
    // Approximate decimal with 4 significant digits and a "~" prefix.
    std::string approx() const;
    // Inverse of str(); throws InvalidArgument on malformed text.
    static Rational parse(const std::string& text);

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

}  // namespace plurichern
