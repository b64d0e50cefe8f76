#pragma once

/**
 * @file genera.hpp
 * @brief Named genera and the identities relating them.
 *
 * A GenusSpec pairs a characteristic series with the grading its sequence is
 * naturally written in. Todd and the Krichever A_k families are Chern-graded;
 * Â and L are even and Pontrjagin-graded. Pontrjagin polynomials are turned
 * into Chern polynomials through p_j = e_j(x_1², ..., x_n²).
 *
 * The verify_* functions return the difference of the two sides as a witness;
 * an identity holds exactly when the witness is zero.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "characteristic_series.hpp"
#include "error.hpp"
#include "graded_polynomial.hpp"
#include "power_series.hpp"
#include "rational.hpp"
#include "symmetric.hpp"

namespace hgenus {

enum class GenusKind { todd, ahat, l, a_k, a_recip_k };

class GenusSpec {
public:
    static GenusSpec todd() { return GenusSpec(GenusKind::todd, 0, Grading::chern); }
    static GenusSpec ahat() { return GenusSpec(GenusKind::ahat, 0, Grading::pontrjagin); }
    static GenusSpec l_genus() { return GenusSpec(GenusKind::l, 0, Grading::pontrjagin); }
    static GenusSpec a_k(long k)
    {
        detail::check_k(k);
        return GenusSpec(GenusKind::a_k, k, Grading::chern);
    }
    static GenusSpec a_recip_k(long k)
    {
        detail::check_k(k);
        return GenusSpec(GenusKind::a_recip_k, k, Grading::chern);
    }

    /// Parses "todd", "ahat", "L", "a_k", "a_recip_k"; the A families need k.
    static GenusSpec from_name(const std::string& name, std::optional<long> k = std::nullopt)
    {
        if (name == "todd") {
            return todd();
        }
        if (name == "ahat") {
            return ahat();
        }
        if (name == "L" || name == "l") {
            return l_genus();
        }
        if (name == "a_k" || name == "a_recip_k") {
            if (!k) {
                throw Error(Errc::bad_k, name + " needs k");
            }
            return name == "a_k" ? a_k(*k) : a_recip_k(*k);
        }
        throw Error(Errc::invalid_argument, "unknown genus \"" + name + "\"");
    }

    GenusKind kind() const { return kind_; }
    long k() const { return k_; }
    Grading grading() const { return grading_; }

    std::string name() const
    {
        switch (kind_) {
        case GenusKind::todd: return "todd";
        case GenusKind::ahat: return "ahat";
        case GenusKind::l: return "L";
        case GenusKind::a_k: return "a_k(" + std::to_string(k_) + ")";
        case GenusKind::a_recip_k: return "a_recip_k(" + std::to_string(k_) + ")";
        }
        return "?";
    }

    /// Short symbol for printed sequences: T, Ahat, L, A[k], A[1/k].
    std::string symbol() const
    {
        switch (kind_) {
        case GenusKind::todd: return "T";
        case GenusKind::ahat: return "Ahat";
        case GenusKind::l: return "L";
        case GenusKind::a_k: return "A[" + std::to_string(k_) + "]";
        case GenusKind::a_recip_k: return "A[1/" + std::to_string(k_) + "]";
        }
        return "?";
    }

    PowerSeries series(int order) const
    {
        switch (kind_) {
        case GenusKind::todd: return todd_series(order);
        case GenusKind::ahat: return ahat_series(order);
        case GenusKind::l: return l_series(order);
        case GenusKind::a_k: return ak_series(k_, order);
        case GenusKind::a_recip_k: return a_recip_k_series(k_, order);
        }
        throw Error(Errc::invalid_argument, "unknown genus kind");
    }

    /// K_0..K_n in the given grading (default: the natural one).
    MultiplicativeSequence sequence(int n, std::optional<Grading> grading = std::nullopt) const
    {
        Grading g = grading.value_or(grading_);
        return multiplicative_sequence(series(g == Grading::pontrjagin ? 2 * n : n), n, g);
    }

private:
    GenusSpec(GenusKind kind, long k, Grading grading) : kind_(kind), k_(k), grading_(grading) {}

    GenusKind kind_;
    long k_;
    Grading grading_;
};

/// p_1..p_count (index 0 holds p_0 = 1) as polynomials in the Chern
/// generators of `chern`, with c_i = 0 for i above its rank:
///
///     p_j = Σ_{a+b=2j} (-1)^{a+j} c_a c_b
inline std::vector<GradedPolynomial> chern_to_pontrjagin(int count, const Ring& chern)
{
    if (chern.grading != Grading::chern) {
        throw Error(Errc::invalid_argument, "chern_to_pontrjagin needs a Chern ring");
    }
    std::vector<GradedPolynomial> out;
    out.push_back(GradedPolynomial::constant(chern, Rational(1)));
    for (int j = 1; j <= count; ++j) {
        GradedPolynomial p(chern);
        for (int a = 0; a <= 2 * j; ++a) {
            int b = 2 * j - a;
            Rational sign((a + j) % 2 == 0 ? 1 : -1);
            p += GradedPolynomial::generator(chern, a) * GradedPolynomial::generator(chern, b) * sign;
        }
        out.push_back(std::move(p));
    }
    return out;
}

/// The n-root version: p_1..p_n in c_1..c_n.
inline std::vector<GradedPolynomial> chern_to_pontrjagin(int n)
{
    if (n < 1) {
        throw Error(Errc::invalid_argument, "chern_to_pontrjagin needs n >= 1");
    }
    return chern_to_pontrjagin(n, Ring{Grading::chern, n, false});
}

/// Rewrites a polynomial in p_j (and possibly x) in the Chern ring `chern`.
inline GradedPolynomial pontrjagin_to_chern(const GradedPolynomial& poly, const Ring& chern)
{
    const Ring& src = poly.ring();
    if (src.grading == Grading::chern) {
        if (src == chern) {
            return poly;
        }
        return graded_substitute(poly, {}, chern);
    }
    if (src.grading != Grading::pontrjagin) {
        throw Error(Errc::invalid_argument, "pontrjagin_to_chern needs a Pontrjagin polynomial");
    }
    if (src.with_x && !chern.with_x) {
        throw Error(Errc::no_distinguished_class, "target ring has no x");
    }
    std::vector<GradedPolynomial> p = chern_to_pontrjagin(src.rank, chern);
    std::map<int, GradedPolynomial> assign;
    for (int j = 1; j <= src.rank; ++j) {
        assign.emplace(src.gen(j), p[static_cast<std::size_t>(j)]);
    }
    return graded_substitute(poly, assign, chern);
}

/// Weight-n polynomial of the genus in c_1..c_n: K_n itself for Chern-graded
/// specs; for Pontrjagin-graded specs K_{n/2} converted (zero for odd n).
inline GradedPolynomial top_chern_polynomial(const GenusSpec& spec, int n)
{
    Ring chern{Grading::chern, n, false};
    if (spec.grading() == Grading::chern) {
        return spec.sequence(n)[n];
    }
    if (n % 2 == 1) {
        return GradedPolynomial(chern);
    }
    return pontrjagin_to_chern(spec.sequence(n / 2)[n / 2], chern);
}

template <typename Witness>
struct Verified {
    bool holds;
    Witness witness;
};

/// T_k = Σ_{r+2s=k} c_1^r Â_s / (r!·2^r), checked in c_1..c_n.
inline Verified<GradedPolynomial> verify_todd_decomposition(int k, int n)
{
    if (k < 1 || k > n) {
        throw Error(Errc::invalid_argument, "verify_todd_decomposition needs 1 <= k <= n");
    }
    Ring chern{Grading::chern, n, false};
    MultiplicativeSequence todd = GenusSpec::todd().sequence(n);
    MultiplicativeSequence ahat = GenusSpec::ahat().sequence(std::max(k / 2, 1));
    GradedPolynomial c1 = GradedPolynomial::generator(chern, 1);

    GradedPolynomial rhs(chern);
    for (int s = 0; 2 * s <= k; ++s) {
        int r = k - 2 * s;
        GradedPolynomial ahat_s = s == 0 ? GradedPolynomial::constant(chern, Rational(1)) : pontrjagin_to_chern(ahat[s], chern);
        Rational coeff = Rational(1) / (Rational(factorial(static_cast<unsigned long>(r))) * pow(Rational(2), r));
        rhs += pow(c1, r) * ahat_s * coeff;
    }
    GradedPolynomial diff = todd[k] - rhs;
    return {diff.is_zero(), diff};
}

/// x·e^{x/k}/(e^x − 1) = e^{(1/k − 1/2)x} · (x/2)/sinh(x/2), coefficientwise.
inline Verified<PowerSeries> verify_exp_identity(long k, int order)
{
    PowerSeries lhs = a_recip_k_series(k, order);
    PowerSeries rhs = series_mul(exp_linear(Rational(1, k) - Rational(1, 2), order), ahat_series(order));
    PowerSeries diff = series_sub(lhs, rhs);
    return {diff == PowerSeries(order), diff};
}

/// K_n(A_k) = k^n · K_n(A_{1/k}) in c_1..c_n.
inline Verified<GradedPolynomial> verify_ak_scaling(long k, int n)
{
    GradedPolynomial direct = GenusSpec::a_k(k).sequence(n)[n];
    GradedPolynomial scaled = GenusSpec::a_recip_k(k).sequence(n)[n] * pow(Rational(k), n);
    GradedPolynomial diff = direct - scaled;
    return {diff.is_zero(), diff};
}

struct A2Check {
    bool holds;
    PowerSeries series_witness;  // A_2 series − x/sinh(x)
    GradedPolynomial witness;    // K_n(A_2) − 2^n · Â in Chern variables
};

/// The A_2 series is x/sinh(x), hence even, and K_n(A_2) = 2^n·Â_{n/2}
/// (zero for odd n) in Chern variables.
inline A2Check verify_a2_is_ahat(int n)
{
    if (n < 1) {
        throw Error(Errc::invalid_argument, "verify_a2_is_ahat needs n >= 1");
    }
    int order = std::max(2 * n, 8);
    PowerSeries a2 = ak_series(2, order);
    PowerSeries x_over_sinh = series_inverse(detail::sinhc(Rational(1), order));
    PowerSeries series_diff = series_sub(a2, x_over_sinh);
    bool series_ok = series_diff == PowerSeries(order) && a2.is_even();

    GradedPolynomial direct = GenusSpec::a_k(2).sequence(n)[n];
    GradedPolynomial via_ahat = top_chern_polynomial(GenusSpec::ahat(), n) * pow(Rational(2), n);
    GradedPolynomial diff = direct - via_ahat;
    return {series_ok && diff.is_zero(), series_diff, diff};
}

/// Series of the A-sequence with A_s = 2^{4s}·Â_s, realized as Â(4x) = 2x/sinh(2x).
inline PowerSeries a_sequence_series(int order)
{
    return series_scale_arg(ahat_series(order), Rational(4));
}

/// The s-th term of the Pontrjagin sequence of Â(4x) equals 2^{4s}·Â_s.
inline Verified<GradedPolynomial> verify_a_sequence_relation(int s)
{
    if (s < 1) {
        throw Error(Errc::invalid_argument, "verify_a_sequence_relation needs s >= 1");
    }
    GradedPolynomial a_s = multiplicative_sequence(a_sequence_series(2 * s), s, Grading::pontrjagin)[s];
    GradedPolynomial ahat_s = GenusSpec::ahat().sequence(s)[s];
    GradedPolynomial diff = a_s - ahat_s * pow(Rational(2), 4 * s);
    return {diff.is_zero(), diff};
}

/// The Krichever series at k = 1 is the Todd series.
inline Verified<PowerSeries> verify_a1_is_todd(int order)
{
    PowerSeries diff = series_sub(detail::krichever_series(1, order), todd_series(order));
    return {diff == PowerSeries(order), diff};
}

} // namespace hgenus
