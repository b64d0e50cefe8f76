#pragma once

// Partitions, Newton's identities and the multiplicative-sequence generator.

#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graded_polynomial.hpp"
#include "power_series.hpp"
#include "rational.hpp"

namespace hgenus {

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive

    int weight() const
    {
        int w = 0;
        for (int p : parts) {
            w += p;
        }
        return w;
    }

    /// Dense multiplicity vector of length `rank`: entry i-1 counts the parts equal to i.
    Exponents multiplicities(int rank) const
    {
        Exponents e(static_cast<std::size_t>(rank), 0);
        for (int p : parts) {
            if (p > rank) {
                throw Error(Errc::invalid_argument, "part " + std::to_string(p) + " exceeds rank " + std::to_string(rank));
            }
            ++e[static_cast<std::size_t>(p - 1)];
        }
        return e;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of n, largest first part first: 4, 3+1, 2+2, 2+1+1, 1+1+1+1.
inline std::vector<Partition> partitions_of(int n)
{
    if (n < 0) {
        throw Error(Errc::invalid_argument, "partitions_of needs n >= 0");
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Power sums ps_1..ps_n of the roots written in elementary symmetric
/// functions e_i (the c_i of a rank-n Chern ring). Index 0 holds ps_0 = n.
///
/// ps_m = Σ_{i=1}^{m-1} (-1)^{i-1} e_i ps_{m-i} + (-1)^{m-1} m e_m
inline std::vector<GradedPolynomial> power_sums_to_elementary(int n)
{
    if (n < 1) {
        throw Error(Errc::invalid_argument, "power_sums_to_elementary needs n >= 1");
    }
    Ring ring{Grading::chern, n, false};
    std::vector<GradedPolynomial> ps;
    ps.push_back(GradedPolynomial::constant(ring, Rational(n)));
    for (int m = 1; m <= n; ++m) {
        GradedPolynomial acc = GradedPolynomial::generator(ring, m) * Rational(m % 2 == 1 ? m : -m);
        for (int i = 1; i < m; ++i) {
            acc += GradedPolynomial::generator(ring, i) * ps[static_cast<std::size_t>(m - i)] * Rational(i % 2 == 1 ? 1 : -1);
        }
        ps.push_back(std::move(acc));
    }
    return ps;
}

/// Elementary symmetric functions e_1..e_n written in power sums s_i. Index 0
/// holds e_0 = 1.
///
/// m e_m = Σ_{i=1}^{m} (-1)^{i-1} e_{m-i} s_i
inline std::vector<GradedPolynomial> elementary_to_power_sums(int n)
{
    if (n < 1) {
        throw Error(Errc::invalid_argument, "elementary_to_power_sums needs n >= 1");
    }
    Ring ring{Grading::power_sum, n, false};
    std::vector<GradedPolynomial> e;
    e.push_back(GradedPolynomial::constant(ring, Rational(1)));
    for (int m = 1; m <= n; ++m) {
        GradedPolynomial acc(ring);
        for (int i = 1; i <= m; ++i) {
            acc += e[static_cast<std::size_t>(m - i)] * GradedPolynomial::generator(ring, i) * Rational(i % 2 == 1 ? 1 : -1);
        }
        e.push_back(acc * Rational(1, m));
    }
    return e;
}

/// exp(L) in a graded ring, dropping weights above `max_weight`. L must have
/// no constant term.
inline GradedPolynomial graded_exp(const GradedPolynomial& L, int max_weight)
{
    for (const auto& [e, c] : L.terms()) {
        if (weight_of(L.ring(), e) == 0) {
            throw Error(Errc::nonzero_constant_term, "graded exp needs a polynomial without constant term");
        }
    }
    GradedPolynomial out = GradedPolynomial::constant(L.ring(), Rational(1));
    GradedPolynomial term = out;
    for (int j = 1; !term.is_zero(); ++j) {
        term = graded_mul(term, L, max_weight) * Rational(1, j);
        out += term;
    }
    return out;
}

/// K_0 = 1, K_1, ..., K_n of a multiplicative sequence.
struct MultiplicativeSequence {
    Ring ring;
    std::vector<GradedPolynomial> terms;

    int length() const { return static_cast<int>(terms.size()) - 1; }
    const GradedPolynomial& operator[](int m) const { return terms.at(static_cast<std::size_t>(m)); }
};

/**
 * Multiplicative sequence of a normalized power series Q.
 *
 * Chern grading: K_m is the weight-m part of Π Q(x_i) in c_i = e_i(x).
 * Pontrjagin grading: Q must be even, Q(x) = f(x²), and K_m is the
 * p-degree-m part of Π f(y_i) in p_j = e_j(y), y_i = x_i².
 *
 * The product is formed as exp(Σ_m b_m ps_m) with log Q = Σ b_m x^m, the
 * power sums rewritten through Newton's identities.
 */
inline MultiplicativeSequence multiplicative_sequence(const PowerSeries& q, int n, Grading grading)
{
    if (n < 1) {
        throw Error(Errc::invalid_argument, "multiplicative_sequence needs n >= 1");
    }
    if (grading == Grading::power_sum) {
        throw Error(Errc::invalid_argument, "sequences are generated in chern or pontrjagin grading");
    }
    if (q[0] != Rational(1)) {
        throw Error(Errc::not_normalized, "Q(0) = " + q[0].to_string() + ", expected 1");
    }
    bool pontrjagin = grading == Grading::pontrjagin;
    int needed = pontrjagin ? 2 * n : n;
    if (q.order() < needed) {
        throw Error(Errc::bad_order, "series order " + std::to_string(q.order()) + " < " + std::to_string(needed));
    }

    PowerSeries root_series = q.truncated(needed);
    if (pontrjagin) {
        if (!root_series.is_even()) {
            throw Error(Errc::odd_series_in_pontrjagin_grading, "Q has a nonzero odd coefficient");
        }
        std::vector<Rational> halved(static_cast<std::size_t>(n) + 1);
        for (int m = 0; m <= n; ++m) {
            halved[static_cast<std::size_t>(m)] = root_series[2 * m];
        }
        root_series = PowerSeries(std::move(halved), n);
    }
    PowerSeries logq = series_log(root_series);

    Ring ring{grading, n, false};
    std::vector<GradedPolynomial> ps = power_sums_to_elementary(n);
    GradedPolynomial L(ring);
    for (int m = 1; m <= n; ++m) {
        if (!logq[m].is_zero()) {
            L += rename_generators(ps[static_cast<std::size_t>(m)], ring) * logq[m];
        }
    }
    int max_weight = pontrjagin ? 2 * n : n;
    GradedPolynomial total = graded_exp(L, max_weight);

    MultiplicativeSequence seq{ring, {}};
    for (int m = 0; m <= n; ++m) {
        seq.terms.push_back(total.homogeneous_part(pontrjagin ? 2 * m : m));
    }
    return seq;
}

} // namespace hgenus
