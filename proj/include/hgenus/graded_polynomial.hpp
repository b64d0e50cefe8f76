#pragma once

/**
 * @file graded_polynomial.hpp
 * @brief Exact polynomials in weighted generators.
 *
 * A Ring names the generators: an optional distinguished class x followed by
 * `rank` generators of one family (Chern classes c_i, Pontrjagin classes p_j,
 * or power sums s_i). Weights are counted in complex degree:
 *
 *     x -> 1,   c_i -> i,   s_i -> i,   p_j -> 2j
 *
 * so a Pontrjagin polynomial of "p-degree" j has weight 2j. Homogeneity is
 * unaffected by this uniform factor of two.
 *
 * Exponent vectors are dense (length = number of generators, x first) and
 * terms are kept in a std::map, i.e. in lexicographic order of exponents.
 * Printing walks that order backwards, so c_1^2 comes before c_2.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace hgenus {

enum class Grading { chern, pontrjagin, power_sum };

inline std::string grading_name(Grading g)
{
    switch (g) {
    case Grading::chern: return "chern";
    case Grading::pontrjagin: return "pontrjagin";
    case Grading::power_sum: return "power_sum";
    }
    return "?";
}

struct Ring {
    Grading grading = Grading::chern;
    int rank = 0;
    bool with_x = false;

    int num_vars() const { return rank + (with_x ? 1 : 0); }

    /// Variable index of the i-th generator, 1-based.
    int gen(int i) const { return i - 1 + (with_x ? 1 : 0); }

    int x() const
    {
        if (!with_x) {
            throw Error(Errc::no_distinguished_class, "ring has no distinguished class x");
        }
        return 0;
    }

    bool is_x(int var) const { return with_x && var == 0; }

    /// 1-based generator number of a non-x variable.
    int gen_number(int var) const { return var + 1 - (with_x ? 1 : 0); }

    int weight_of(int var) const
    {
        if (is_x(var)) {
            return 1;
        }
        int i = gen_number(var);
        return grading == Grading::pontrjagin ? 2 * i : i;
    }

    std::string name_of(int var) const
    {
        if (is_x(var)) {
            return "x";
        }
        const char* stem = grading == Grading::chern ? "c_" : grading == Grading::pontrjagin ? "p_" : "s_";
        return stem + std::to_string(gen_number(var));
    }

    friend bool operator==(const Ring&, const Ring&) = default;
};

using Exponents = std::vector<int>;

inline int weight_of(const Ring& ring, const Exponents& e)
{
    int w = 0;
    for (int v = 0; v < static_cast<int>(e.size()); ++v) {
        w += e[static_cast<std::size_t>(v)] * ring.weight_of(v);
    }
    return w;
}

/// All exponent vectors of the ring with total weight `weight`, in
/// lexicographic order.
inline std::vector<Exponents> weighted_monomials(const Ring& ring, int weight)
{
    std::vector<Exponents> out;
    Exponents cur(static_cast<std::size_t>(ring.num_vars()), 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == ring.num_vars()) {
            if (remaining == 0) {
                out.push_back(cur);
            }
            return;
        }
        int w = ring.weight_of(var);
        for (int e = 0; e * w <= remaining; ++e) {
            cur[static_cast<std::size_t>(var)] = e;
            rec(var + 1, remaining - e * w);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    if (weight >= 0) {
        rec(0, weight);
    }
    return out;
}

class GradedPolynomial {
public:
    using Terms = std::map<Exponents, Rational>;

    explicit GradedPolynomial(Ring ring) : ring_(ring) {}

    static GradedPolynomial constant(Ring ring, const Rational& c)
    {
        GradedPolynomial p(ring);
        p.add_term(Exponents(static_cast<std::size_t>(ring.num_vars()), 0), c);
        return p;
    }

    static GradedPolynomial variable(Ring ring, int var, const Rational& c = Rational(1))
    {
        if (var < 0 || var >= ring.num_vars()) {
            throw Error(Errc::invalid_argument, "variable index " + std::to_string(var) + " out of range");
        }
        Exponents e(static_cast<std::size_t>(ring.num_vars()), 0);
        e[static_cast<std::size_t>(var)] = 1;
        GradedPolynomial p(ring);
        p.add_term(e, c);
        return p;
    }

    /// i-th generator (c_i, p_i or s_i), 1-based; zero when i exceeds the rank.
    static GradedPolynomial generator(Ring ring, int i)
    {
        if (i == 0) {
            return constant(ring, Rational(1));
        }
        if (i < 0 || i > ring.rank) {
            return GradedPolynomial(ring);
        }
        return variable(ring, ring.gen(i));
    }

    static GradedPolynomial x(Ring ring) { return variable(ring, ring.x()); }

    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational{} : it->second;
    }

    void add_term(const Exponents& e, const Rational& c)
    {
        if (static_cast<int>(e.size()) != ring_.num_vars()) {
            throw Error(Errc::invalid_argument, "exponent vector has wrong length");
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    /// Weight of a nonzero homogeneous polynomial; nullopt for zero or
    /// inhomogeneous input.
    std::optional<int> weight() const
    {
        std::optional<int> w;
        for (const auto& [e, c] : terms_) {
            int we = weight_of(ring_, e);
            if (w && *w != we) {
                return std::nullopt;
            }
            w = we;
        }
        return w;
    }

    bool is_homogeneous() const { return is_zero() || weight().has_value(); }

    GradedPolynomial homogeneous_part(int weight) const
    {
        GradedPolynomial out(ring_);
        for (const auto& [e, c] : terms_) {
            if (weight_of(ring_, e) == weight) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    /// Drops every term of weight above `max_weight`.
    GradedPolynomial truncated(int max_weight) const
    {
        GradedPolynomial out(ring_);
        for (const auto& [e, c] : terms_) {
            if (weight_of(ring_, e) <= max_weight) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    GradedPolynomial& operator+=(const GradedPolynomial& rhs)
    {
        check_same_ring(rhs);
        for (const auto& [e, c] : rhs.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    GradedPolynomial& operator-=(const GradedPolynomial& rhs)
    {
        check_same_ring(rhs);
        for (const auto& [e, c] : rhs.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    GradedPolynomial& operator*=(const Rational& c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) {
            v *= c;
        }
        return *this;
    }

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
    friend GradedPolynomial operator*(GradedPolynomial a, const Rational& c) { return a *= c; }
    friend GradedPolynomial operator*(const Rational& c, GradedPolynomial a) { return a *= c; }

    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b)
    {
        return graded_mul(a, b, -1);
    }

    /// Product, optionally dropping terms above `max_weight` (-1: keep all).
    friend GradedPolynomial graded_mul(const GradedPolynomial& a, const GradedPolynomial& b, int max_weight)
    {
        a.check_same_ring(b);
        GradedPolynomial out(a.ring_);
        Exponents e(static_cast<std::size_t>(a.ring_.num_vars()));
        for (const auto& [ea, ca] : a.terms_) {
            int wa = weight_of(a.ring_, ea);
            if (max_weight >= 0 && wa > max_weight) {
                continue;
            }
            for (const auto& [eb, cb] : b.terms_) {
                if (max_weight >= 0 && wa + weight_of(b.ring_, eb) > max_weight) {
                    continue;
                }
                for (std::size_t v = 0; v < e.size(); ++v) {
                    e[v] = ea[v] + eb[v];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b)
    {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    /// Linear evaluation: Σ coefficient · value(exponents).
    template <typename F>
    Rational evaluate(F&& value) const
    {
        Rational out;
        for (const auto& [e, c] : terms_) {
            out += c * value(e);
        }
        return out;
    }

    std::string monomial_string(const Exponents& e) const
    {
        std::string out;
        for (int v = 0; v < ring_.num_vars(); ++v) {
            int k = e[static_cast<std::size_t>(v)];
            if (k == 0) {
                continue;
            }
            if (!out.empty()) {
                out += ' ';
            }
            out += ring_.name_of(v);
            if (k != 1) {
                out += '^' + std::to_string(k);
            }
        }
        return out;
    }

    /// e.g. "1/12 c_1^2 + 1/12 c_2", "-1/24 p_1", "0".
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool negative = c.sign() < 0;
            if (out.empty()) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            Rational mag = negative ? -c : c;
            std::string mono = monomial_string(e);
            if (mono.empty()) {
                out += mag.to_string();
            } else if (mag == Rational(1)) {
                out += mono;
            } else {
                out += mag.to_string() + " " + mono;
            }
        }
        return out;
    }

private:
    void check_same_ring(const GradedPolynomial& other) const
    {
        if (!(ring_ == other.ring_)) {
            throw Error(Errc::invalid_argument, "polynomials live in different rings");
        }
    }

    Ring ring_;
    Terms terms_;
};

inline GradedPolynomial pow(const GradedPolynomial& base, int exponent, int max_weight = -1)
{
    GradedPolynomial out = GradedPolynomial::constant(base.ring(), Rational(1));
    for (int i = 0; i < exponent; ++i) {
        out = graded_mul(out, base, max_weight);
    }
    return out;
}

/// Substitutes variables of `poly` and re-expresses the result in `target`.
///
/// Variables listed in `assignments` map to the given polynomial, which must
/// be zero or homogeneous of the variable's weight. Unlisted variables map to
/// the variable of the same name in `target` (x to x, c_i to c_i, ...); an
/// unlisted variable with no counterpart is an error. Terms above
/// `max_weight` are dropped when it is non-negative.
inline GradedPolynomial graded_substitute(const GradedPolynomial& poly, const std::map<int, GradedPolynomial>& assignments,
                                          const Ring& target, int max_weight = -1)
{
    const Ring& src = poly.ring();
    std::vector<GradedPolynomial> images;
    images.reserve(static_cast<std::size_t>(src.num_vars()));
    for (int v = 0; v < src.num_vars(); ++v) {
        auto it = assignments.find(v);
        if (it != assignments.end()) {
            const GradedPolynomial& img = it->second;
            if (!(img.ring() == target)) {
                throw Error(Errc::invalid_argument, "substitution for " + src.name_of(v) + " is not in the target ring");
            }
            auto w = img.weight();
            if (!img.is_zero() && (!w || *w != src.weight_of(v))) {
                throw Error(Errc::weight_mismatch, "substitution for " + src.name_of(v) + " (weight " + std::to_string(src.weight_of(v)) +
                                                       ") is " + img.to_string());
            }
            images.push_back(img);
            continue;
        }
        if (src.is_x(v)) {
            images.push_back(GradedPolynomial::x(target));
            continue;
        }
        int i = src.gen_number(v);
        if (src.grading != target.grading) {
            throw Error(Errc::invalid_argument, "no substitution given for " + src.name_of(v));
        }
        images.push_back(GradedPolynomial::generator(target, i));
    }

    GradedPolynomial out(target);
    std::vector<std::map<int, GradedPolynomial>> powers(images.size());
    auto power_of = [&](std::size_t v, int k) -> const GradedPolynomial& {
        auto& cache = powers[v];
        auto it = cache.find(k);
        if (it == cache.end()) {
            it = cache.emplace(k, pow(images[v], k, max_weight)).first;
        }
        return it->second;
    };
    for (const auto& [e, c] : poly.terms()) {
        GradedPolynomial term = GradedPolynomial::constant(target, c);
        for (std::size_t v = 0; v < e.size() && !term.is_zero(); ++v) {
            if (e[v] != 0) {
                term = graded_mul(term, power_of(v, e[v]), max_weight);
            }
        }
        out += term;
    }
    return out;
}

/// Re-reads the generators of `poly` as generators of another family with the
/// same rank (e.g. elementary symmetric functions of squared roots as p_j).
inline GradedPolynomial rename_generators(const GradedPolynomial& poly, const Ring& target)
{
    if (target.num_vars() != poly.ring().num_vars() || target.with_x != poly.ring().with_x) {
        throw Error(Errc::invalid_argument, "rename_generators needs rings of the same shape");
    }
    GradedPolynomial out(target);
    for (const auto& [e, c] : poly.terms()) {
        out.add_term(e, c);
    }
    return out;
}

} // namespace hgenus
