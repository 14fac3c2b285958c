#include "plurichern/rational.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "plurichern/error.hpp"

namespace plurichern {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.sign() == 0) {
        throw Error(ErrorKind::InvalidArgument, "division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Integer Rational::to_integer() const {
    if (!is_integer()) {
        throw Error(ErrorKind::InvalidArgument, "rational " + str() + " is not an integer");
    }
    return value_.get_num();
}

Integer Rational::floor() const {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return out;
}

Integer Rational::ceil() const {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return out;
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::approx() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "~%.4g", to_double());
    return buf;
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    auto parse_int = [&](const std::string& s, Integer& out) {
        if (s.empty() || out.set_str(s, 10) != 0) {
            throw Error(ErrorKind::InvalidArgument, "malformed rational '" + text + "'");
        }
    };
    if (slash == std::string::npos) {
        parse_int(text, num);
    } else {
        parse_int(text.substr(0, slash), num);
        parse_int(text.substr(slash + 1), den);
    }
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace plurichern
