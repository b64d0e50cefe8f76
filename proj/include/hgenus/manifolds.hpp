#pragma once

/**
 * @file manifolds.hpp
 * @brief Characteristic-number tables and genus evaluation.
 *
 * A CharacteristicTable stands in for a closed 2n-manifold: it records the
 * value on the fundamental class of weight-n monomials x^a c_1^{e_1} ... c_n^{e_n}.
 * Keys are exponent vectors [a, e_1, ..., e_n] of the ring
 * {chern, rank n, with x}; tables without a distinguished class only carry
 * keys with a = 0.
 *
 * When k0 is set the table encodes c_1 = k0·x, and every entry containing
 * c_1 must equal k0 times the entry with one c_1 traded for x.
 *
 * Pontrjagin numbers are never stored; they are derived from Chern numbers.
 */

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "genera.hpp"
#include "graded_polynomial.hpp"
#include "rational.hpp"

namespace hgenus {

/// "x^2 c_1^1 c_3^1": zero exponents omitted, exponents always written, x
/// first then c_i by index. The empty monomial is "1".
inline std::string monomial_key(const Exponents& e)
{
    std::string out;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += v == 0 ? std::string("x") : "c_" + std::to_string(v);
        out += '^' + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

/// Inverse of monomial_key for a table of half-dimension n.
inline Exponents parse_monomial_key(const std::string& key, int n)
{
    Exponents e(static_cast<std::size_t>(n) + 1, 0);
    if (key == "1") {
        return e;
    }
    auto fail = [&](const std::string& why) { return Error(Errc::parse_error, "monomial \"" + key + "\": " + why); };
    std::istringstream in(key);
    std::string token;
    bool any = false;
    while (in >> token) {
        any = true;
        auto caret = token.find('^');
        if (caret == std::string::npos || caret + 1 == token.size()) {
            throw fail("token \"" + token + "\" lacks an exponent");
        }
        std::string var = token.substr(0, caret);
        std::string exp = token.substr(caret + 1);
        if (exp.find_first_not_of("0123456789") != std::string::npos || exp.size() > 6) {
            throw fail("bad exponent in \"" + token + "\"");
        }
        int power = std::stoi(exp);
        if (power == 0) {
            throw fail("zero exponents are omitted in canonical keys");
        }
        std::size_t slot = 0;
        if (var == "x") {
            slot = 0;
        } else if (var.size() > 2 && var.compare(0, 2, "c_") == 0 &&
                   var.find_first_not_of("0123456789", 2) == std::string::npos && var.size() < 8) {
            int i = std::stoi(var.substr(2));
            if (i < 1 || i > n) {
                throw fail("c_" + std::to_string(i) + " outside 1.." + std::to_string(n));
            }
            slot = static_cast<std::size_t>(i);
        } else {
            throw fail("unknown variable \"" + var + "\"");
        }
        if (e[slot] != 0) {
            throw fail("variable repeated");
        }
        e[slot] = power;
    }
    if (!any) {
        throw fail("empty key");
    }
    return e;
}

class CharacteristicTable {
public:
    using Numbers = std::map<Exponents, Rational>;

    CharacteristicTable(int half_dim, bool has_x, std::optional<long> k0 = std::nullopt)
        : half_dim_(half_dim), has_x_(has_x), k0_(k0)
    {
        if (half_dim < 0) {
            throw Error(Errc::invariant_violation, "negative half dimension");
        }
    }

    int half_dim() const { return half_dim_; }
    bool has_x() const { return has_x_; }
    std::optional<long> k0() const { return k0_; }
    const Numbers& numbers() const { return numbers_; }
    const std::map<std::string, bool>& hypotheses() const { return hypotheses_; }

    /// Ring of the keys: Chern classes c_1..c_n plus x.
    Ring ring() const { return Ring{Grading::chern, half_dim_, true}; }

    void set_hypothesis(const std::string& name, bool value) { hypotheses_[name] = value; }

    /// Stores a number without checking invariants; call validate() afterwards.
    void set(const Exponents& key, const Rational& value) { numbers_[key] = value; }

    std::optional<Rational> find(const Exponents& key) const
    {
        auto it = numbers_.find(key);
        if (it == numbers_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    const Rational& at(const Exponents& key) const
    {
        auto it = numbers_.find(key);
        if (it == numbers_.end()) {
            throw Error(Errc::missing_monomial, "table has no entry for " + monomial_key(key));
        }
        return it->second;
    }

    /// Throws InvariantViolation naming the offending monomial.
    void validate() const
    {
        if (k0_ && !has_x_) {
            throw Error(Errc::invariant_violation, "k0 is set but the table has no distinguished class");
        }
        Ring r = ring();
        for (const auto& [key, value] : numbers_) {
            if (static_cast<int>(key.size()) != half_dim_ + 1) {
                throw Error(Errc::invariant_violation, "key " + monomial_key(key) + " has the wrong length");
            }
            for (int v : key) {
                if (v < 0) {
                    throw Error(Errc::invariant_violation, "negative exponent in " + monomial_key(key));
                }
            }
            if (weight_of(r, key) != half_dim_) {
                throw Error(Errc::invariant_violation, "monomial " + monomial_key(key) + " has weight " +
                                                           std::to_string(weight_of(r, key)) + ", expected " +
                                                           std::to_string(half_dim_));
            }
            if (!has_x_ && key[0] != 0) {
                throw Error(Errc::invariant_violation, "monomial " + monomial_key(key) + " uses x but the table has none");
            }
            if (k0_ && half_dim_ >= 1 && key[1] > 0) {
                Exponents partner = key;
                --partner[1];
                ++partner[0];
                auto other = find(partner);
                if (other && value != Rational(*k0_) * *other) {
                    throw Error(Errc::invariant_violation, "monomial " + monomial_key(key) + " = " + value.to_string() +
                                                               " but k0 * " + monomial_key(partner) + " = " +
                                                               (Rational(*k0_) * *other).to_string());
                }
            }
        }
    }

    friend bool operator==(const CharacteristicTable&, const CharacteristicTable&) = default;

private:
    int half_dim_;
    bool has_x_;
    std::optional<long> k0_;
    std::map<std::string, bool> hypotheses_;
    Numbers numbers_;
};

namespace detail {

/// Fills every weight-n monomial of a table whose total Chern class is
/// Σ gamma_i x^i, with x^n[M] = top.
inline void fill_from_chern_in_x(CharacteristicTable& table, const std::vector<Rational>& gamma, const Rational& top)
{
    for (const Exponents& e : weighted_monomials(table.ring(), table.half_dim())) {
        Rational value = top;
        for (std::size_t i = 1; i < e.size(); ++i) {
            value *= pow(gamma[i], e[i]);
        }
        table.set(e, value);
    }
}

} // namespace detail

/// CP^n: c = (1+x)^{n+1}, x^n[CP^n] = 1, c_1 = (n+1)x.
inline CharacteristicTable cp_table(int n)
{
    if (n < 1) {
        throw Error(Errc::invalid_argument, "cp_table needs n >= 1");
    }
    CharacteristicTable table(n, true, n + 1);
    std::vector<Rational> gamma(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        gamma[static_cast<std::size_t>(i)] = Rational(binomial(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(i)));
    }
    detail::fill_from_chern_in_x(table, gamma, Rational(1));
    table.validate();
    return table;
}

/// Degree-d hypersurface in CP^{n+1}: c = (1+x)^{n+2}/(1+dx), x^n[X] = d,
/// c_1 = (n+2-d)x.
inline CharacteristicTable hypersurface_table(int n, int d)
{
    if (n < 1 || d < 1) {
        throw Error(Errc::invalid_argument, "hypersurface_table needs n >= 1 and d >= 1");
    }
    CharacteristicTable table(n, true, n + 2 - d);
    std::vector<Rational> gamma(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Rational acc;
        for (int j = 0; j <= i; ++j) {
            // (1+dx)^{-1} contributes (-d)^{i-j}
            acc += Rational(binomial(static_cast<unsigned long>(n + 2), static_cast<unsigned long>(j))) * pow(Rational(-d), i - j);
        }
        gamma[static_cast<std::size_t>(i)] = acc;
    }
    detail::fill_from_chern_in_x(table, gamma, Rational(d));
    table.validate();
    return table;
}

/// The point: half_dim 0, [pt] = 1.
inline CharacteristicTable point_table()
{
    CharacteristicTable table(0, false);
    table.set(Exponents{0}, Rational(1));
    return table;
}

/// Chern numbers of A×B from c(A×B) = c(A)·c(B). Only x-free numbers of the
/// factors are used and the product carries no distinguished class.
inline CharacteristicTable product_table(const CharacteristicTable& a, const CharacteristicTable& b)
{
    int na = a.half_dim();
    int nb = b.half_dim();
    int n = na + nb;
    CharacteristicTable out(n, false);

    // Work in a ring whose generators are c_1..c_na of A then c_1..c_nb of B;
    // weights are tracked separately to truncate each factor at its dimension.
    struct Key {
        Exponents ea, eb;
        auto operator<=>(const Key&) const = default;
    };
    using Expansion = std::map<Key, Rational>;
    auto weight = [](const Exponents& e) {
        int w = 0;
        for (std::size_t i = 1; i < e.size(); ++i) {
            w += static_cast<int>(i) * e[i];
        }
        return w;
    };
    auto multiply = [&](const Expansion& lhs, const Expansion& rhs) {
        Expansion res;
        for (const auto& [kl, cl] : lhs) {
            for (const auto& [kr, cr] : rhs) {
                Key k{kl.ea, kl.eb};
                for (std::size_t i = 0; i < k.ea.size(); ++i) {
                    k.ea[i] += kr.ea[i];
                }
                for (std::size_t i = 0; i < k.eb.size(); ++i) {
                    k.eb[i] += kr.eb[i];
                }
                if (weight(k.ea) > na || weight(k.eb) > nb) {
                    continue;
                }
                Rational& slot = res[k];
                slot += cl * cr;
            }
        }
        return res;
    };
    Exponents zero_a(static_cast<std::size_t>(na) + 1, 0);
    Exponents zero_b(static_cast<std::size_t>(nb) + 1, 0);
    // c_i(A×B) = Σ_{j} c_j(A) c_{i-j}(B)
    std::vector<Expansion> total(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = std::max(0, i - nb); j <= std::min(i, na); ++j) {
            Key k{zero_a, zero_b};
            if (j > 0) {
                k.ea[static_cast<std::size_t>(j)] = 1;
            }
            if (i - j > 0) {
                k.eb[static_cast<std::size_t>(i - j)] = 1;
            }
            total[static_cast<std::size_t>(i)][k] = Rational(1);
        }
    }
    for (const Exponents& e : weighted_monomials(Ring{Grading::chern, n, false}, n)) {
        Expansion acc{{Key{zero_a, zero_b}, Rational(1)}};
        for (int i = 1; i <= n; ++i) {
            for (int m = 0; m < e[static_cast<std::size_t>(i - 1)]; ++m) {
                acc = multiply(acc, total[static_cast<std::size_t>(i)]);
            }
        }
        Rational value;
        for (const auto& [k, c] : acc) {
            if (c.is_zero() || weight(k.ea) != na || weight(k.eb) != nb) {
                continue;
            }
            value += c * a.at(k.ea) * b.at(k.eb);
        }
        Exponents key(static_cast<std::size_t>(n) + 1, 0);
        std::copy(e.begin(), e.end(), key.begin() + 1);
        out.set(key, value);
    }
    out.validate();
    return out;
}

/// Evaluates a polynomial of weight half_dim in Chern variables (with or
/// without x, any rank) or Pontrjagin variables against the table.
inline Rational evaluate(const CharacteristicTable& table, const GradedPolynomial& poly)
{
    if (poly.is_zero()) {
        return Rational{};
    }
    Ring target = table.ring();
    GradedPolynomial chern = poly.ring().grading == Grading::pontrjagin ? pontrjagin_to_chern(poly, target)
                                                                        : graded_substitute(poly, {}, target, table.half_dim());
    auto w = poly.weight();
    if (!w || *w != table.half_dim()) {
        throw Error(Errc::weight_mismatch, "cannot evaluate " + poly.to_string() + " on a " +
                                               std::to_string(2 * table.half_dim()) + "-manifold");
    }
    return chern.evaluate([&](const Exponents& e) { return table.at(e); });
}

/// Genus of the table: the degree-n polynomial of the spec evaluated on [M].
inline Rational evaluate_genus(const CharacteristicTable& table, const GenusSpec& spec)
{
    int n = table.half_dim();
    if (n == 0) {
        return table.at(Exponents{0});
    }
    return evaluate(table, top_chern_polynomial(spec, n));
}

/// (x^a · poly)[M]; poly may be in Chern or Pontrjagin variables.
inline Rational evaluate_mixed(const CharacteristicTable& table, int a, const GradedPolynomial& poly)
{
    if (!table.has_x()) {
        throw Error(Errc::no_distinguished_class, "table has no distinguished class x");
    }
    if (poly.is_zero()) {
        return Rational{};
    }
    auto w = poly.weight();
    if (a < 0 || !w || a + *w != table.half_dim()) {
        throw Error(Errc::weight_mismatch, "x^" + std::to_string(a) + " * (" + poly.to_string() + ") is not of weight " +
                                               std::to_string(table.half_dim()));
    }
    Ring target = table.ring();
    GradedPolynomial chern = poly.ring().grading == Grading::pontrjagin ? pontrjagin_to_chern(poly, target)
                                                                        : graded_substitute(poly, {}, target);
    GradedPolynomial mixed = pow(GradedPolynomial::x(target), a) * chern;
    return mixed.evaluate([&](const Exponents& e) { return table.at(e); });
}

} // namespace hgenus
