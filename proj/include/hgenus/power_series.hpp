#pragma once

// Truncated univariate power series over Rational.
//
// A series carries its truncation order explicitly: coefficients 0..order are
// known, everything above is unknown. Binary operations truncate to the
// smaller order of their operands.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace hgenus {

class PowerSeries {
public:
    /// The zero series known up to `order`.
    explicit PowerSeries(int order = 0)
    {
        if (order < 0) {
            throw Error(Errc::bad_order, "order " + std::to_string(order) + " is negative");
        }
        coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational{});
    }

    /// Coefficients listed from degree 0; the order is the list length minus one.
    PowerSeries(std::initializer_list<Rational> coeffs) : coeffs_(coeffs)
    {
        if (coeffs_.empty()) {
            coeffs_.emplace_back();
        }
    }

    /// Coefficients padded with zeros (or truncated) to `order`.
    PowerSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs))
    {
        if (order < 0) {
            throw Error(Errc::bad_order, "order " + std::to_string(order) + " is negative");
        }
        coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    static PowerSeries constant(const Rational& c, int order)
    {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c * x^degree, truncated to `order`.
    static PowerSeries monomial(const Rational& c, int degree, int order)
    {
        PowerSeries s(order);
        if (degree <= order) {
            s.coeffs_[static_cast<std::size_t>(degree)] = c;
        }
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of x^m; zero above the truncation order is not implied, so
    /// asking for m > order is an error.
    const Rational& operator[](int m) const
    {
        if (m < 0 || m > order()) {
            throw Error(Errc::bad_order, "coefficient " + std::to_string(m) + " outside order " + std::to_string(order()));
        }
        return coeffs_[static_cast<std::size_t>(m)];
    }

    PowerSeries truncated(int order) const
    {
        return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1), order);
    }

    bool is_even() const
    {
        for (int m = 1; m <= order(); m += 2) {
            if (!coeffs_[static_cast<std::size_t>(m)].is_zero()) {
                return false;
            }
        }
        return true;
    }

    /// Equality up to the common order.
    friend bool operator==(const PowerSeries& a, const PowerSeries& b)
    {
        int common = std::min(a.order(), b.order());
        return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + common + 1, b.coeffs_.begin());
    }

    std::string to_string() const
    {
        std::string out;
        for (int m = 0; m <= order(); ++m) {
            const Rational& c = coeffs_[static_cast<std::size_t>(m)];
            if (c.is_zero()) {
                continue;
            }
            if (!out.empty()) {
                out += c.sign() < 0 ? " - " : " + ";
            } else if (c.sign() < 0) {
                out += "-";
            }
            Rational mag = c.sign() < 0 ? -c : c;
            if (m == 0) {
                out += mag.to_string();
            } else {
                if (mag != Rational(1)) {
                    out += mag.to_string() + " ";
                }
                out += m == 1 ? std::string("x") : "x^" + std::to_string(m);
            }
        }
        if (out.empty()) {
            out = "0";
        }
        return out + " + O(x^" + std::to_string(order() + 1) + ")";
    }

private:
    std::vector<Rational> coeffs_;
};

inline PowerSeries series_add(const PowerSeries& a, const PowerSeries& b)
{
    int order = std::min(a.order(), b.order());
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        out[static_cast<std::size_t>(m)] = a[m] + b[m];
    }
    return PowerSeries(std::move(out), order);
}

inline PowerSeries series_scale(const PowerSeries& a, const Rational& c)
{
    std::vector<Rational> out = a.coefficients();
    for (auto& v : out) {
        v *= c;
    }
    return PowerSeries(std::move(out), a.order());
}

inline PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b)
{
    return series_add(a, series_scale(b, Rational(-1)));
}

inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b)
{
    int order = std::min(a.order(), b.order());
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= order; ++j) {
            out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return PowerSeries(std::move(out), order);
}

/// Multiplicative inverse; requires a nonzero constant term.
inline PowerSeries series_inverse(const PowerSeries& a)
{
    if (a[0].is_zero()) {
        throw Error(Errc::zero_constant_term, "cannot invert a series with zero constant term");
    }
    int order = a.order();
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    Rational inv0 = Rational(1) / a[0];
    out[0] = inv0;
    for (int m = 1; m <= order; ++m) {
        Rational acc;
        for (int j = 1; j <= m; ++j) {
            acc += a[j] * out[static_cast<std::size_t>(m - j)];
        }
        out[static_cast<std::size_t>(m)] = -acc * inv0;
    }
    return PowerSeries(std::move(out), order);
}

/// Formal derivative; the order drops by one (floor at zero).
inline PowerSeries series_derivative(const PowerSeries& a)
{
    int order = std::max(a.order() - 1, 0);
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    for (int m = 1; m <= a.order(); ++m) {
        out[static_cast<std::size_t>(m - 1)] = a[m] * Rational(m);
    }
    return PowerSeries(std::move(out), order);
}

/// exp(a) for a with zero constant term, via the recurrence
/// m·e_m = Σ_{j=1..m} j·a_j·e_{m-j} (from e' = a'·e).
inline PowerSeries series_exp(const PowerSeries& a)
{
    if (!a[0].is_zero()) {
        throw Error(Errc::nonzero_constant_term, "exp needs a series with zero constant term");
    }
    int order = a.order();
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    out[0] = Rational(1);
    for (int m = 1; m <= order; ++m) {
        Rational acc;
        for (int j = 1; j <= m; ++j) {
            acc += Rational(j) * a[j] * out[static_cast<std::size_t>(m - j)];
        }
        out[static_cast<std::size_t>(m)] = acc / Rational(m);
    }
    return PowerSeries(std::move(out), order);
}

/// log(a) for a with constant term 1.
inline PowerSeries series_log(const PowerSeries& a)
{
    if (a[0] != Rational(1)) {
        throw Error(Errc::not_normalized, "log needs constant term 1, got " + a[0].to_string());
    }
    int order = a.order();
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    // m·l_m = m·a_m − Σ_{j=1..m-1} j·l_j·a_{m-j}
    for (int m = 1; m <= order; ++m) {
        Rational acc = Rational(m) * a[m];
        for (int j = 1; j < m; ++j) {
            acc -= Rational(j) * out[static_cast<std::size_t>(j)] * a[m - j];
        }
        out[static_cast<std::size_t>(m)] = acc / Rational(m);
    }
    return PowerSeries(std::move(out), order);
}

/// a(λx): coefficient m is multiplied by λ^m.
inline PowerSeries series_scale_arg(const PowerSeries& a, const Rational& lambda)
{
    std::vector<Rational> out = a.coefficients();
    Rational power(1);
    for (auto& v : out) {
        v *= power;
        power *= lambda;
    }
    return PowerSeries(std::move(out), a.order());
}

/// e^{λx} truncated to `order`, from the factorial series.
inline PowerSeries exp_linear(const Rational& lambda, int order)
{
    if (order < 0) {
        throw Error(Errc::bad_order, "order " + std::to_string(order) + " is negative");
    }
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        out[static_cast<std::size_t>(m)] = pow(lambda, m) / Rational(factorial(static_cast<unsigned long>(m)));
    }
    return PowerSeries(std::move(out), order);
}

} // namespace hgenus
