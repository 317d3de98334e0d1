#include "metatok/action.hpp"

#include "metatok/errors.hpp"

namespace metatok {

namespace {

void check_index(int i, int r) {
    if (i < 1 || i > r) throw InvalidArgument("simple reflection index out of range");
}

// Adds c * sigma_i(x^lam) numerator terms into out.
void add_sigma_terms(LaurentPoly& out, int i, const ScalarPoly& c, const Exponents& lam) {
    const int n = out.degree();
    const std::size_t a = static_cast<std::size_t>(i - 1);
    const int d = lam[a + 1] - lam[a];
    Exponents base = lam;
    std::swap(base[a], base[a + 1]);
    auto along = [&](int k) {
        Exponents e = base;
        e[a] += k;
        e[a + 1] -= k;
        return e;
    };
    // X^{-r_n(d)} (1 - v)
    out.add_term(along(-residue(d, n)), c * h_flat(0, n));
    // v g_{1+d} X^{1-n} (X^n - 1)
    ScalarPoly g = c * v_times_g(1 + d, n);
    out.add_term(along(1), g);
    out.add_term(along(1 - n), -g);
}

} // namespace

RationalElement sigma_monomial(int i, const ScalarPoly& c, const Exponents& lam, int r, int n) {
    check_index(i, r);
    if (lam.size() != static_cast<std::size_t>(r + 1)) throw InvalidArgument("exponent vector length mismatch");
    LaurentPoly num(r, n);
    add_sigma_terms(num, i, c, lam);
    return RationalElement(std::move(num), {BinomialFactor{i, i + 1, 1}});
}

LaurentPoly sigma_numerator(int i, const LaurentPoly& f) {
    check_index(i, f.rank());
    LaurentPoly num(f.rank(), f.degree());
    for (const auto& [e, c] : f.terms()) add_sigma_terms(num, i, c, e);
    return num;
}

RationalElement sigma_rational(int i, const RationalElement& f) {
    check_index(i, f.rank());
    auto s = Permutation::simple(i, f.rank() + 1);
    RationalElement out = RationalElement(sigma_numerator(i, f.numerator())).divided_by(i, i + 1, 1);
    for (const auto& d : f.denominator()) out = out.divided_by(s(d.i), s(d.j), d.c_power);
    return out;
}

RationalElement act_word(const Word& w, const RationalElement& f) {
    RationalElement out = f;
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = sigma_rational(*it, out);
    return out;
}

} // namespace metatok
