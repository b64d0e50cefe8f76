#pragma once

/**
 * @file vanishing.hpp
 * @brief Vandermonde vanishing engine for mixed characteristic numbers.
 *
 * Input premise: for a distinguished class x with c_1 = k0·x, the relation
 *
 *     (exp(k x / 2) · Â)[M] = 0
 *
 * holds for every integer k with k ≡ k0 (mod 2) and |k| < |k0|. Its degree-2n
 * part is Σ_s (k/2)^{n-2s}/(n-2s)! · u_s with unknowns u_s = (x^{n-2s} Â_s)[M],
 * s = 0..⌊n/2⌋. Choosing ⌊n/2⌋+1 admissible k with distinct |k| gives a square
 * system whose integer form (rows k^n, k^{n-2}, ...) is Vandermonde in k² for
 * even n and k times Vandermonde in k² for odd n. Invertibility forces every
 * u_s to vanish, and the Todd and A_k conclusions are linear combinations of
 * the u_s:
 *
 *     x^{n-i} T_i = Σ_{2s<=i} k0^{i-2s} / ((i-2s)! 2^{i-2s}) · x^{n-2s} Â_s
 *     A_k = k^n · Σ_s ((1/k - 1/2) k0)^{n-2s} / (n-2s)! · x^{n-2s} Â_s
 *
 * The relation itself, and the geometric hypotheses behind it, are taken as
 * given: the engine never claims to check them.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "genera.hpp"
#include "graded_polynomial.hpp"
#include "manifolds.hpp"
#include "rational.hpp"

namespace hgenus {

struct HattoriInstance {
    int n = 0;
    long k0 = 0;
    int parity = 0;
    int unknown_count = 0;

    static HattoriInstance make(int n, long k0)
    {
        return HattoriInstance{n, k0, static_cast<int>(std::labs(k0) % 2), n / 2 + 1};
    }

    friend bool operator==(const HattoriInstance&, const HattoriInstance&) = default;
};

enum class ConclusionStatus { derived, verified_zero, violated };

inline std::string status_name(ConclusionStatus s)
{
    switch (s) {
    case ConclusionStatus::derived: return "derived";
    case ConclusionStatus::verified_zero: return "verified-zero";
    case ConclusionStatus::violated: return "violated";
    }
    return "?";
}

inline ConclusionStatus parse_status(const std::string& s)
{
    if (s == "derived") {
        return ConclusionStatus::derived;
    }
    if (s == "verified-zero") {
        return ConclusionStatus::verified_zero;
    }
    if (s == "violated") {
        return ConclusionStatus::violated;
    }
    throw Error(Errc::parse_error, "unknown conclusion status \"" + s + "\"");
}

struct Conclusion {
    std::string statement;
    ConclusionStatus status = ConclusionStatus::derived;
    std::optional<Rational> residual;         // evaluated value (numeric mode)
    std::optional<Rational> route_difference; // direct value minus value through the u_s
    std::vector<Rational> combination;        // coefficients on u_0..u_m, when known

    friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

struct RelationValue {
    long k = 0;
    Rational value;

    friend bool operator==(const RelationValue&, const RelationValue&) = default;
};

struct HattoriReport {
    std::string mode; // "symbolic" or "numeric"
    HattoriInstance instance;
    std::vector<long> admissible_ks;
    std::vector<std::vector<Rational>> matrix;
    Rational determinant;
    std::map<std::string, bool> hypotheses; // echoed, never verified
    std::vector<RelationValue> relations;   // numeric mode: relation values at admissible k
    std::vector<Conclusion> conclusions;

    bool all_pass() const
    {
        for (const auto& c : conclusions) {
            if (c.status == ConclusionStatus::violated) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const HattoriReport&, const HattoriReport&) = default;
};

/// Coefficients (k/2)^{n-2s}/(n-2s)! for s = 0..⌊n/2⌋ of the degree-2n part
/// of exp(kx/2)·Â in the unknowns x^{n-2s}Â_s.
inline std::vector<Rational> expand_constraint(int n, long k)
{
    if (n < 2) {
        throw Error(Errc::dimension_too_small, "need n >= 2, got " + std::to_string(n));
    }
    std::vector<Rational> row;
    Rational half_k(k, 2);
    for (int s = 0; 2 * s <= n; ++s) {
        int d = n - 2 * s;
        row.push_back(pow(half_k, d) / Rational(factorial(static_cast<unsigned long>(d))));
    }
    return row;
}

/// Smallest ⌊n/2⌋+1 non-negative integers of k0's parity below |k0|; zero is
/// used only for even n. Throws InsufficientBound when |k0| < n+2.
inline std::vector<long> admissible_ks(int n, long k0)
{
    if (n < 1) {
        throw Error(Errc::dimension_too_small, "need n >= 1, got " + std::to_string(n));
    }
    long bound = std::labs(k0);
    std::string need = "need |k0| ≥ " + std::to_string(n + 2) + ", got |k0| = " + std::to_string(bound);
    if (bound < n + 2) {
        throw Error(Errc::insufficient_bound, need);
    }
    std::size_t wanted = static_cast<std::size_t>(n / 2 + 1);
    long k = bound % 2 == 1 ? 1 : (n % 2 == 0 ? 0 : 2);
    std::vector<long> ks;
    for (; k < bound && ks.size() < wanted; k += 2) {
        ks.push_back(k);
    }
    if (ks.size() < wanted) {
        throw Error(Errc::insufficient_bound, need);
    }
    return ks;
}

/// Fraction-free (Bareiss) determinant with row pivoting.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m)
{
    std::size_t size = m.size();
    if (size == 0) {
        return BigInt(1);
    }
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        std::size_t pivot = k;
        while (pivot < size && m[pivot][k] == 0) {
            ++pivot;
        }
        if (pivot == size) {
            return BigInt(0);
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[size - 1][size - 1];
}

struct HattoriMatrix {
    std::vector<std::vector<Rational>> entries;
    Rational determinant;
};

/// Integer form of the system: row i is (k_i^n, k_i^{n-2}, ..., k_i^{n-2⌊n/2⌋}).
inline HattoriMatrix hattori_matrix(int n, const std::vector<long>& ks)
{
    if (n < 2) {
        throw Error(Errc::dimension_too_small, "need n >= 2, got " + std::to_string(n));
    }
    std::size_t size = static_cast<std::size_t>(n / 2 + 1);
    if (ks.size() != size) {
        throw Error(Errc::invalid_argument, "need " + std::to_string(size) + " values of k, got " + std::to_string(ks.size()));
    }
    for (std::size_t i = 0; i < ks.size(); ++i) {
        for (std::size_t j = i + 1; j < ks.size(); ++j) {
            if (std::labs(ks[i]) == std::labs(ks[j])) {
                throw Error(Errc::invalid_argument, "values of k must have distinct absolute values");
            }
        }
    }
    HattoriMatrix out;
    std::vector<std::vector<BigInt>> ints;
    for (long k : ks) {
        std::vector<Rational> row;
        std::vector<BigInt> irow;
        for (int s = 0; 2 * s <= n; ++s) {
            Rational e = pow(Rational(k), n - 2 * s);
            row.push_back(e);
            irow.push_back(e.numerator());
        }
        out.entries.push_back(std::move(row));
        ints.push_back(std::move(irow));
    }
    out.determinant = Rational(bareiss_determinant(std::move(ints)));
    if (out.determinant.is_zero()) {
        throw Error(Errc::singular_matrix, "hattori matrix is singular");
    }
    return out;
}

namespace detail {

inline std::string mixed_name(int a, const std::string& symbol)
{
    std::string xs = a == 0 ? "" : a == 1 ? "x " : "x^" + std::to_string(a) + " ";
    return "(" + xs + symbol + ")[M] = 0";
}

/// Coefficients of x^{n-i}T_i on the unknowns u_s (c_1 = k0·x).
inline std::vector<Rational> todd_combination(int n, int i, long k0)
{
    std::vector<Rational> comb(static_cast<std::size_t>(n / 2 + 1));
    for (int s = 0; 2 * s <= i; ++s) {
        int r = i - 2 * s;
        comb[static_cast<std::size_t>(s)] =
            pow(Rational(k0), r) / (Rational(factorial(static_cast<unsigned long>(r))) * pow(Rational(2), r));
    }
    return comb;
}

/// Coefficients of A_k(M) = k^n A_{1/k}(M) on the unknowns u_s.
inline std::vector<Rational> ak_combination(int n, long k, long k0)
{
    std::vector<Rational> comb;
    Rational lambda = (Rational(1, k) - Rational(1, 2)) * Rational(k0);
    Rational scale = pow(Rational(k), n);
    for (int s = 0; 2 * s <= n; ++s) {
        int d = n - 2 * s;
        comb.push_back(scale * pow(lambda, d) / Rational(factorial(static_cast<unsigned long>(d))));
    }
    return comb;
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational out;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        out += a[i] * b[i];
    }
    return out;
}

/// Â_s in c_1..c_n (with x available), s = 0..⌊n/2⌋.
inline std::vector<GradedPolynomial> ahat_in_chern(int n, const Ring& target)
{
    std::vector<GradedPolynomial> out{GradedPolynomial::constant(target, Rational(1))};
    if (n >= 2) {
        MultiplicativeSequence seq = GenusSpec::ahat().sequence(n / 2);
        for (int s = 1; 2 * s <= n; ++s) {
            out.push_back(pontrjagin_to_chern(seq[s], target));
        }
    }
    return out;
}

/// Substitutes c_1 -> k0·x in a polynomial of the mixed ring.
inline GradedPolynomial pin_c1(const GradedPolynomial& poly, long k0)
{
    const Ring& ring = poly.ring();
    return graded_substitute(poly, {{ring.gen(1), GradedPolynomial::x(ring) * Rational(k0)}}, ring);
}

/// Checks x^{n-i}T_i = Σ comb_s x^{n-2s}Â_s in the mixed ring once c_1 = k0·x.
inline bool todd_combination_holds(int n, int i, long k0, const std::vector<GradedPolynomial>& ahat,
                                   const MultiplicativeSequence& todd)
{
    Ring ring{Grading::chern, n, true};
    GradedPolynomial x = GradedPolynomial::x(ring);
    GradedPolynomial lhs = pow(x, n - i) * (i == 0 ? GradedPolynomial::constant(ring, Rational(1))
                                                   : graded_substitute(todd[i], {}, ring));
    GradedPolynomial rhs(ring);
    std::vector<Rational> comb = todd_combination(n, i, k0);
    for (int s = 0; 2 * s <= n; ++s) {
        if (!comb[static_cast<std::size_t>(s)].is_zero()) {
            rhs += pow(x, n - 2 * s) * ahat[static_cast<std::size_t>(s)] * comb[static_cast<std::size_t>(s)];
        }
    }
    return pin_c1(lhs - rhs, k0).is_zero();
}

inline void check_instance(int n, long k0)
{
    if (n < 2) {
        throw Error(Errc::dimension_too_small, "the manifold must have dimension 2n > 2, got n = " + std::to_string(n));
    }
    (void)admissible_ks(n, k0);
}

inline HattoriReport report_skeleton(const std::string& mode, int n, long k0)
{
    check_instance(n, k0);
    HattoriReport report;
    report.mode = mode;
    report.instance = HattoriInstance::make(n, k0);
    report.admissible_ks = admissible_ks(n, k0);
    HattoriMatrix m = hattori_matrix(n, report.admissible_ks);
    report.matrix = std::move(m.entries);
    report.determinant = m.determinant;
    return report;
}

} // namespace detail

/// Symbolic mode: all conclusions of the vanishing theorem for (n, k0),
/// justified by the invertible matrix. The Todd conclusions are re-derived
/// symbolically; a failed derivation is reported as violated.
inline HattoriReport solve_vanishing(int n, long k0)
{
    HattoriReport report = detail::report_skeleton("symbolic", n, k0);
    int m = n / 2;
    for (int s = 0; s <= m; ++s) {
        Conclusion c;
        c.statement = detail::mixed_name(n - 2 * s, "Ahat_" + std::to_string(s));
        c.combination.assign(static_cast<std::size_t>(m + 1), Rational{});
        c.combination[static_cast<std::size_t>(s)] = Rational(1);
        report.conclusions.push_back(std::move(c));
    }
    Ring ring{Grading::chern, n, true};
    std::vector<GradedPolynomial> ahat = detail::ahat_in_chern(n, ring);
    MultiplicativeSequence todd = GenusSpec::todd().sequence(n);
    for (int i = 0; i <= n; ++i) {
        Conclusion c;
        c.statement = detail::mixed_name(n - i, "T_" + std::to_string(i));
        c.combination = detail::todd_combination(n, i, k0);
        if (!detail::todd_combination_holds(n, i, k0, ahat, todd)) {
            c.status = ConclusionStatus::violated;
        }
        report.conclusions.push_back(std::move(c));
    }
    Conclusion td;
    td.statement = "Td(M) = 0";
    td.combination = detail::todd_combination(n, n, k0);
    td.status = report.conclusions.back().status;
    report.conclusions.push_back(std::move(td));

    Conclusion ak;
    ak.statement = "A_k(M) = 0 for every k >= 2";
    report.conclusions.push_back(std::move(ak));
    return report;
}

/// Σ_s (k/2)^{n-2s}/(n-2s)! · (x^{n-2s}Â_s)[M]; zero iff the relation holds on the table.
inline Rational verify_hattori_relation(const CharacteristicTable& table, long k)
{
    if (!table.has_x()) {
        throw Error(Errc::no_distinguished_class, "table has no distinguished class x");
    }
    int n = table.half_dim();
    std::vector<GradedPolynomial> ahat = detail::ahat_in_chern(n, table.ring());
    Rational out;
    Rational half_k(k, 2);
    for (int s = 0; 2 * s <= n; ++s) {
        int d = n - 2 * s;
        out += pow(half_k, d) / Rational(factorial(static_cast<unsigned long>(d))) *
               evaluate_mixed(table, d, ahat[static_cast<std::size_t>(s)]);
    }
    return out;
}

/// Numeric mode: evaluates every conclusion on the table, with 2 <= k <= max_k
/// for the A_k genera. A conclusion passes when its value is exactly zero and,
/// where two routes exist, both routes agree.
inline HattoriReport check_theorem(const CharacteristicTable& table, long max_k)
{
    table.validate();
    if (!table.has_x()) {
        throw Error(Errc::no_distinguished_class, "table has no distinguished class x");
    }
    if (!table.k0()) {
        throw Error(Errc::invalid_argument, "table does not set k0");
    }
    int n = table.half_dim();
    long k0 = *table.k0();
    HattoriReport report = detail::report_skeleton("numeric", n, k0);
    report.hypotheses = table.hypotheses();

    for (long k : report.admissible_ks) {
        report.relations.push_back({k, verify_hattori_relation(table, k)});
    }

    Ring ring = table.ring();
    std::vector<GradedPolynomial> ahat = detail::ahat_in_chern(n, ring);
    std::vector<Rational> unknowns;
    int m = n / 2;
    for (int s = 0; s <= m; ++s) {
        Rational u = evaluate_mixed(table, n - 2 * s, ahat[static_cast<std::size_t>(s)]);
        unknowns.push_back(u);
        Conclusion c;
        c.statement = detail::mixed_name(n - 2 * s, "Ahat_" + std::to_string(s));
        c.residual = u;
        c.combination.assign(static_cast<std::size_t>(m + 1), Rational{});
        c.combination[static_cast<std::size_t>(s)] = Rational(1);
        c.status = u.is_zero() ? ConclusionStatus::verified_zero : ConclusionStatus::violated;
        report.conclusions.push_back(std::move(c));
    }

    auto two_route = [&](std::string statement, const Rational& direct, std::vector<Rational> comb) {
        Conclusion c;
        c.statement = std::move(statement);
        c.residual = direct;
        c.route_difference = direct - detail::dot(comb, unknowns);
        c.combination = std::move(comb);
        c.status = direct.is_zero() && c.route_difference->is_zero() ? ConclusionStatus::verified_zero
                                                                     : ConclusionStatus::violated;
        return c;
    };

    MultiplicativeSequence todd = GenusSpec::todd().sequence(n);
    for (int i = 0; i <= n; ++i) {
        GradedPolynomial t = i == 0 ? GradedPolynomial::constant(ring, Rational(1)) : todd[i];
        report.conclusions.push_back(two_route(detail::mixed_name(n - i, "T_" + std::to_string(i)),
                                               evaluate_mixed(table, n - i, t), detail::todd_combination(n, i, k0)));
    }
    report.conclusions.push_back(
        two_route("Td(M) = 0", evaluate_genus(table, GenusSpec::todd()), detail::todd_combination(n, n, k0)));
    for (long k = 2; k <= max_k; ++k) {
        report.conclusions.push_back(two_route("A_" + std::to_string(k) + "(M) = 0", evaluate_genus(table, GenusSpec::a_k(k)),
                                               detail::ak_combination(n, k, k0)));
    }
    return report;
}

namespace detail {

/// Solves a square system exactly; throws SingularMatrix.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    std::size_t size = b.size();
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == size) {
            throw Error(Errc::singular_matrix, "linear system is singular");
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < size; ++row) {
            if (row == col || a[row][col].is_zero()) {
                continue;
            }
            Rational f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < size; ++j) {
                a[row][j] -= f * a[col][j];
            }
            b[row] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < size; ++i) {
        b[i] /= a[i][i];
    }
    return b;
}

} // namespace detail

/**
 * A complete table for (n, k0) on which the relation holds at every
 * admissible k.
 *
 * Numbers x^a·(c_2..c_n monomial) start as pseudo-random integers in [-9, 9]
 * drawn from std::mt19937_64(seed). The values of the pivots x^n and
 * x^{n-2s} c_{2s} (s >= 1) are then re-solved so that the relations hold;
 * entries containing c_1 follow from c_1 = k0·x. The result need not be
 * realizable by any manifold.
 */
inline CharacteristicTable synthesize_consistent_table(int n, long k0, std::uint64_t seed)
{
    detail::check_instance(n, k0);
    CharacteristicTable table(n, true, k0);
    Ring ring = table.ring();

    std::vector<Exponents> free;
    for (const Exponents& e : weighted_monomials(ring, n)) {
        if (e[1] == 0) {
            free.push_back(e);
        }
    }
    std::mt19937_64 rng(seed);
    std::map<Exponents, Rational> values;
    for (const Exponents& e : free) {
        values[e] = Rational(static_cast<long>(rng() % 19) - 9);
    }

    // u_s as linear functionals on the free numbers.
    std::vector<GradedPolynomial> ahat = detail::ahat_in_chern(n, ring);
    GradedPolynomial x = GradedPolynomial::x(ring);
    std::vector<GradedPolynomial> unknowns;
    for (int s = 0; 2 * s <= n; ++s) {
        unknowns.push_back(detail::pin_c1(pow(x, n - 2 * s) * ahat[static_cast<std::size_t>(s)], k0));
    }

    std::vector<Exponents> pivots;
    for (int s = 0; 2 * s <= n; ++s) {
        Exponents e(static_cast<std::size_t>(n) + 1, 0);
        e[0] = n - 2 * s;
        if (s > 0) {
            e[static_cast<std::size_t>(2 * s)] = 1;
        }
        pivots.push_back(e);
    }

    std::vector<long> ks = admissible_ks(n, k0);
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (long k : ks) {
        std::vector<Rational> row = expand_constraint(n, k);
        GradedPolynomial relation(ring);
        for (std::size_t s = 0; s < row.size(); ++s) {
            relation += unknowns[s] * row[s];
        }
        std::vector<Rational> arow;
        for (const Exponents& p : pivots) {
            arow.push_back(relation.coefficient(p));
        }
        Rational rhs;
        for (const auto& [e, c] : relation.terms()) {
            if (std::find(pivots.begin(), pivots.end(), e) == pivots.end()) {
                rhs -= c * values.at(e);
            }
        }
        a.push_back(std::move(arow));
        b.push_back(rhs);
    }
    std::vector<Rational> solved = detail::solve_linear(std::move(a), std::move(b));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        values[pivots[i]] = solved[i];
    }

    for (const Exponents& e : weighted_monomials(ring, n)) {
        Exponents base = e;
        base[0] += base[1];
        base[1] = 0;
        table.set(e, pow(Rational(k0), e[1]) * values.at(base));
    }
    table.set_hypothesis("connected", true);
    table.set_hypothesis("h1_zero", true);
    table.set_hypothesis("nontrivial_circle_action", true);
    table.validate();
    return table;
}

} // namespace hgenus
