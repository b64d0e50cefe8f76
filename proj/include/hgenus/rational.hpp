#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar backed by GMP.
 *
 * Values are always in lowest terms with a positive denominator, and zero is
 * 0/1. The textual form is "p/q", or just "p" when q = 1; no decimal
 * rendering is provided.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "error.hpp"

namespace hgenus {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(static_cast<long>(value)) {}
    explicit Rational(const BigInt& value) : value_(value) {}

    Rational(const BigInt& num, const BigInt& den)
    {
        if (den == 0) {
            throw Error(Errc::division_by_zero, "zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p" or "p/q"; q may not be zero. Non-reduced input is
    /// accepted and canonicalized.
    static Rational parse(std::string_view text)
    {
        auto valid_int = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
                s.remove_prefix(1);
            }
            if (s.empty()) {
                return false;
            }
            for (char ch : s) {
                if (ch < '0' || ch > '9') {
                    return false;
                }
            }
            return true;
        };
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
            throw Error(Errc::parse_error, "not a rational: \"" + std::string(text) + "\"");
        }
        auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
        BigInt n(std::string(strip_plus(num)), 10);
        BigInt d(std::string(den), 10);
        if (d == 0) {
            throw Error(Errc::parse_error, "zero denominator in \"" + std::string(text) + "\"");
        }
        return Rational(n, d);
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string to_string() const { return value_.get_str(10); }

    Rational operator-() const
    {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    Rational& operator+=(const Rational& rhs)
    {
        value_ += rhs.value_;
        return *this;
    }
    Rational& operator-=(const Rational& rhs)
    {
        value_ -= rhs.value_;
        return *this;
    }
    Rational& operator*=(const Rational& rhs)
    {
        value_ *= rhs.value_;
        return *this;
    }
    Rational& operator/=(const Rational& rhs)
    {
        if (rhs.is_zero()) {
            throw Error(Errc::division_by_zero, "division of " + to_string() + " by zero");
        }
        value_ /= rhs.value_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

/// Integer power; negative exponents invert.
inline Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        return Rational(1) / pow(base, -exponent);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

inline BigInt factorial(unsigned long m)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), m);
    return out;
}

inline BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace hgenus
