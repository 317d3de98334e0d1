#pragma once

#include "metatok/action.hpp"
#include "metatok/laurent.hpp"
#include "metatok/weyl.hpp"

#include <map>
#include <vector>

namespace metatok {

// (f - x^{n alpha_i} sigma_i(f)) / (1 - x^{n alpha_i}). For n > 1 this can keep
// a factor 1 - v x^{n alpha_i} in the denominator, e.g. D_1(1) = 1/(1 - g x^alpha) at n = 2.
RationalElement demazure(int i, const LaurentPoly& f);
RationalElement demazure(int i, const RationalElement& f);

// (1 - v x^{n alpha_i}) D_i(f) - f
LaurentPoly demazure_lusztig(int i, const LaurentPoly& f);

// D_{i1} ... D_{il} f and T_{i1} ... T_{il} f, the last letter first.
RationalElement apply_demazure_word(const Word& w, const RationalElement& f);
LaurentPoly apply_dl_word(const Word& w, const LaurentPoly& f);

// T_u f for every u in the given down-closed set, built along greedy reduced words.
std::map<Permutation, LaurentPoly> dl_table(const LaurentPoly& f, const std::vector<Permutation>& elements);

// Sum over u <= w of T_u f.
LaurentPoly bruhat_dl_sum(const Permutation& w, const LaurentPoly& f);

// (1/Delta) sum_w sgn(w) prod_{alpha in Phi(w^-1)} x^{n alpha} w(f)
RationalElement longword_demazure_formula(const LaurentPoly& f);

// sgn(w) prod_{alpha in Phi(w^-1)} x^{n alpha}
LaurentPoly chinta_offen_j(const Permutation& w, int r, int n);

// sum_w j(w, x) w(f) with the metaplectic action.
RationalElement chinta_offen_sum(const LaurentPoly& f);

// (sum over all w of T_w)(x^{w0 lam})
LaurentPoly whittaker_value(const std::vector<int>& lam, int n);

bool is_dominant(const std::vector<int>& lam);

} // namespace metatok
