#pragma once

#include "metatok/laurent.hpp"

#include <random>

namespace metatok::testing {

inline Exponents random_exponents(std::mt19937_64& rng, int r, int lo = -2, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Exponents e(static_cast<std::size_t>(r + 1));
    for (auto& x : e) x = d(rng);
    return e;
}

inline LaurentPoly random_monomial(std::mt19937_64& rng, int r, int n) {
    return LaurentPoly::monomial(r, n, random_exponents(rng, r));
}

inline ScalarPoly random_scalar(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> vexp(-1, 2);
    std::uniform_int_distribution<int> sym(0, n - 1);
    ScalarPoly s(n);
    for (int k = 0; k < 3; ++k) {
        ScalarPoly term = ScalarPoly::v_power(n, vexp(rng), coef(rng));
        const int a = sym(rng);
        if (a > 0) term *= ScalarPoly::gamma(n, a);
        s += term;
    }
    return s;
}

// A few terms with small exponents and random scalar coefficients.
inline LaurentPoly random_poly(std::mt19937_64& rng, int r, int n, int terms = 3) {
    LaurentPoly f(r, n);
    for (int k = 0; k < terms; ++k) f.add_term(random_exponents(rng, r, -1, 2), random_scalar(rng, n));
    return f;
}

} // namespace metatok::testing
