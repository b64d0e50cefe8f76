#pragma once

// Table manipulations shared by the tests.

#include <cstdint>
#include <random>

#include "hgenus/vanishing.hpp"

namespace fixture {

using namespace hgenus;

/// Adds `delta` to a c_1-free entry x^a·m and to every entry x^{a-j} c_1^j·m
/// derived from it, so the table still satisfies c_1 = k0·x.
inline void perturb(CharacteristicTable& t, const Exponents& key, const Rational& delta)
{
    Rational step = delta;
    Exponents e = key;
    Rational k0(*t.k0());
    while (true) {
        t.set(e, t.at(e) + step);
        if (e[0] == 0) {
            break;
        }
        --e[0];
        ++e[1];
        step *= k0;
    }
}

/// Every x-decorated number zero (c_1 is torsion, so rationally c_1 = 0) and
/// random x-free Chern numbers. For even n the top Â number is a genuine
/// constraint, u_{n/2} = Â_{n/2}[M] carries no x, so c_n is shifted to make
/// it vanish.
inline CharacteristicTable torsion_table(int n, long k0, std::uint64_t seed)
{
    CharacteristicTable t(n, true, k0);
    std::mt19937_64 rng(seed);
    Ring ring = t.ring();
    for (const Exponents& e : weighted_monomials(ring, n)) {
        bool decorated = e[0] > 0 || e[1] > 0;
        t.set(e, decorated ? Rational{} : Rational(static_cast<long>(rng() % 41) - 20));
    }
    if (n % 2 == 0) {
        GradedPolynomial ahat = detail::ahat_in_chern(n, ring).back();
        Exponents cn(static_cast<std::size_t>(n) + 1, 0);
        cn[static_cast<std::size_t>(n)] = 1;
        Rational value = evaluate(t, ahat);
        Rational slope = ahat.coefficient(cn);
        t.set(cn, t.at(cn) - value / slope);
    }
    return t;
}

} // namespace fixture
