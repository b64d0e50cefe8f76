#pragma once

// The characteristic power series of the genera handled by the library.
// Every series is built from factorial series and exact inversion; the
// quotients (e^{kx} - 1)/x and sinh(x/2)/(x/2) are formed with x already
// divided out so the inverted series has a nonzero constant term.

#include <string>

#include "error.hpp"
#include "power_series.hpp"
#include "rational.hpp"

namespace hgenus {

namespace detail {

inline void check_order(int order)
{
    if (order < 0) {
        throw Error(Errc::bad_order, "order must be >= 0, got " + std::to_string(order));
    }
}

inline void check_k(long k)
{
    if (k < 2) {
        throw Error(Errc::bad_k, "k must be >= 2, got " + std::to_string(k));
    }
}

/// (e^{λx} - 1)/x = Σ λ^{m+1} x^m / (m+1)!
inline PowerSeries exp_minus_one_over_x(const Rational& lambda, int order)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        c[static_cast<std::size_t>(m)] = pow(lambda, m + 1) / Rational(factorial(static_cast<unsigned long>(m + 1)));
    }
    return PowerSeries(std::move(c), order);
}

/// sinh(λx)/(λx) = Σ (λx)^{2m} / (2m+1)!
inline PowerSeries sinhc(const Rational& lambda, int order)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int m = 0; 2 * m <= order; ++m) {
        c[static_cast<std::size_t>(2 * m)] = pow(lambda, 2 * m) / Rational(factorial(static_cast<unsigned long>(2 * m + 1)));
    }
    return PowerSeries(std::move(c), order);
}

/// k·x·e^x / (e^{kx} - 1) without the k >= 2 restriction; k = 1 is the Todd series.
inline PowerSeries krichever_series(long k, int order)
{
    Rational kk(k);
    return series_mul(exp_linear(Rational(1), order),
                      series_scale(series_inverse(exp_minus_one_over_x(kk, order)), kk));
}

} // namespace detail

/// x / (1 - e^{-x})
inline PowerSeries todd_series(int order)
{
    detail::check_order(order);
    return series_inverse(series_scale(detail::exp_minus_one_over_x(Rational(-1), order), Rational(-1)));
}

/// (x/2) / sinh(x/2); even.
inline PowerSeries ahat_series(int order)
{
    detail::check_order(order);
    return series_inverse(detail::sinhc(Rational(1, 2), order));
}

/// x / tanh(x); even. Generates the L-sequence.
inline PowerSeries l_series(int order)
{
    detail::check_order(order);
    std::vector<Rational> cosh(static_cast<std::size_t>(order) + 1);
    for (int m = 0; 2 * m <= order; ++m) {
        cosh[static_cast<std::size_t>(2 * m)] = Rational(1) / Rational(factorial(static_cast<unsigned long>(2 * m)));
    }
    return series_mul(PowerSeries(std::move(cosh), order), series_inverse(detail::sinhc(Rational(1), order)));
}

/// k·x·e^x / (e^{kx} - 1), k >= 2.
inline PowerSeries ak_series(long k, int order)
{
    detail::check_k(k);
    detail::check_order(order);
    return detail::krichever_series(k, order);
}

/// x·e^{x/k} / (e^x - 1), k >= 2.
inline PowerSeries a_recip_k_series(long k, int order)
{
    detail::check_k(k);
    detail::check_order(order);
    return series_mul(exp_linear(Rational(1, k), order), series_inverse(detail::exp_minus_one_over_x(Rational(1), order)));
}

} // namespace hgenus
