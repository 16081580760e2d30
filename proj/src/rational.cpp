#include "pwdyn/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pwdyn {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return std::string(s);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class n(strip_plus(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        const std::string_view den = text.substr(slash + 1);
        if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
            throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
        }
        d = mpz_class(std::string(den), 10);
        if (d == 0) {
            throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
        }
    }
    return Rational(mpq_class(n, d));
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("cannot convert a non-finite double to a rational");
    }
    return Rational(mpq_class(value));
}

std::string Rational::str() const {
    return value_.get_str(10);
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
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace pwdyn
