#pragma once

#include "metatok/laurent.hpp"
#include "metatok/weyl.hpp"

namespace metatok {

// c * sigma_i(x^lam) with the single denominator factor 1 - v x^{n alpha_i}.
RationalElement sigma_monomial(int i, const ScalarPoly& c, const Exponents& lam, int r, int n);

// Numerator N with sigma_i(f) = N / (1 - v x^{n alpha_i}).
LaurentPoly sigma_numerator(int i, const LaurentPoly& f);

RationalElement sigma_rational(int i, const RationalElement& f);

// w(f) for w = s_{i1} ... s_{il}; the last letter acts first.
RationalElement act_word(const Word& w, const RationalElement& f);

} // namespace metatok
